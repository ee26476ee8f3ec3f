#pragma once

#include <vector>

#include "csb/polynomial.hpp"
#include "csb/quadrature.hpp"

namespace csb {

/// Number of module generators of the left inner spherical monogenics of
/// order k: C(m+k-2, k), with value 1 at k = 0.
long long monogenic_dimension(int m, int k);

/// Basis element of M_l^+(k). `exact` is the unnormalized orthogonal
/// representative with rational coefficients (Dirac-annihilated exactly);
/// `normalized` = exact / sqrt(norm_sq) has unit mean square on S^{m-1}.
struct MonogenicElement {
  Polynomial<Rational> exact;
  Rational norm_sq;
  Polynomial<double> normalized;
};

struct MonogenicBasis {
  int m = 0;
  int k = 0;
  std::vector<MonogenicElement> elements;
};

/// Normalized spherical pairing (1/A_m) int_{S^{m-1}} bar(P) Q dS for
/// homogeneous P, Q of equal degree, reduced to Gaussian moments through the
/// radial factor 2^{k+m/2-1} Gamma(k+m/2); exact over the rationals.
Multivector<Rational> sphere_pairing_exact(const Polynomial<Rational>& p,
                                           const Polynomial<Rational>& q);

Multivector<double> sphere_pairing(const Polynomial<double>& p, const Polynomial<double>& q);

/// Dirac null space over homogeneous degree-k polynomials with coefficients
/// restricted to the even subalgebra (a right-module generating set), module
/// generator extraction, then right-module Gram-Schmidt under the full
/// Clifford-valued spherical pairing (<P_i, P_j> = delta_ij exactly).
/// Deterministic: graded-lex monomials, ascending blade masks, j = position.
MonogenicBasis build_monogenic_basis(int m, int k);

/// Memoized access; distinct (m, k) builds may run concurrently.
const MonogenicBasis& monogenic_basis(int m, int k);

/// Symbolic check D p = 0; exact rings compare to zero, floating rings use
/// a relative coefficient tolerance.
template <class S>
bool verify_monogenic(const Polynomial<S>& p, double tol = 1e-12) {
  const auto d = dirac(p);
  if constexpr (ScalarTraits<S>::is_exact) {
    (void)tol;
    return d.is_zero();
  } else {
    double worst = 0.0, scale = 0.0;
    for (const auto& [a, c] : d.terms()) worst = std::max(worst, norm0(c));
    for (const auto& [a, c] : p.terms()) scale = std::max(scale, norm0(c));
    return worst <= tol * std::max(1.0, scale);
  }
}

}  // namespace csb
