#pragma once

#include <vector>

#include "csb/monogenics.hpp"

namespace csb {

/// Label (l, k, j) of a basis function; j is 1-based and bounded by
/// monogenic_dimension(m, k).
struct BasisIndex {
  int l = 0;
  int k = 0;
  int j = 1;

  friend bool operator==(const BasisIndex& a, const BasisIndex& b) {
    return a.l == b.l && a.k == b.k && a.j == b.j;
  }
  friend bool operator<(const BasisIndex& a, const BasisIndex& b) {
    if (a.l != b.l) return a.l < b.l;
    if (a.k != b.k) return a.k < b.k;
    return a.j < b.j;
  }
};

/// Orthogonality constant of the Hermite system, evaluated through
/// log-Gamma so large l+k stay in range:
///   l = 2p:   2^{2p+m/2+k} p! pi^{m/2} Gamma(m/2+k+p)   / Gamma(m/2)
///   l = 2p+1: 2^{2p+m/2+k+1} p! pi^{m/2} Gamma(m/2+k+p+1) / Gamma(m/2)
double gamma_constant(int l, int k, int m);

/// H_{l,m,k} P_k from the Rodrigues recursion: one Dirac step against the
/// e^{-|x|^2/2} envelope maps f to -x f + D f, and H_l P = (-1)^l times the
/// l-fold iterate. Rejects non-monogenic input.
template <class S>
Polynomial<S> hermite_times_monogenic(int l, const Polynomial<S>& pk,
                                      int degree_cap = kDegreeCap) {
  if (!verify_monogenic(pk))
    throw std::invalid_argument("hermite_times_monogenic: P_k must be monogenic");
  auto q = gaussian_dirac_power(pk, l, degree_cap);
  if (l % 2 == 1) q = -q;
  return q;
}

/// L^2 basis function phi_{l,k,j} = polynomial part times the fixed Gaussian
/// envelope e^{-|x|^2/4}; the polynomial part carries 1/sqrt(gamma_{l,k})
/// and the normalized P_k^{(j)}.
struct HermiteFunction {
  BasisIndex idx;
  Polynomial<double> poly;
};

const HermiteFunction& phi(int m, const BasisIndex& idx);

/// All indices with l <= lmax, k <= kmax in (l, k, j) ascending order — the
/// fixed summation order of every series in this library.
std::vector<BasisIndex> basis_indices(int m, int lmax, int kmax);

/// <f, g> = int bar(f) g dx for f, g given by their polynomial parts (both
/// carry the e^{-|x|^2/4} envelope), via Gaussian quadrature at variance 1.
Multivector<double> l2_inner(const Polynomial<double>& f_poly, const Polynomial<double>& g_poly,
                             Exec exec = Exec::parallel);

/// Scalar parts of all pairwise l2_inner values over basis_indices order.
std::vector<std::vector<double>> gram_matrix(int m, int lmax, int kmax,
                                             Exec exec = Exec::parallel);

}  // namespace csb
