#pragma once

#include <complex>
#include <span>
#include <vector>

#include "csb/hermite.hpp"

namespace csb {

using Cx = std::complex<double>;

/// Image of the basis function phi_{l,k,j} under the transform:
/// Psi_{l,k,j}(z) = (1/sqrt(gamma_{l,k})) z^l P_k^{(j)}(z), with z^l built by
/// repeated vector multiplication. Memoized.
const Polynomial<Cx>& transform_exact(int m, const BasisIndex& idx);

/// The transform evaluated from its integral definition,
///   (Bf)(z) = (2 pi)^{-m/2} int exp(-z.z/2 + x.z - x.x/4) f(x) dx,
/// for f = f_poly * e^{-|x|^2/4}. The kernel exponential and the envelope
/// fold into the variance-1 Gaussian with a complex shift of z, so the
/// quadrature is exact up to the rule degree. Acts component-wise on the
/// Clifford coefficients.
Multivector<Cx> transform_numeric(const Polynomial<double>& f_poly, std::span<const Cx> z,
                                  Exec exec = Exec::parallel);

/// Short-time Fourier transform with the Gaussian window e^{-|x|^2/4}:
///   (V f)(t, w) = (2 pi)^{-m/2} int f(x) win(x - t) e^{-i w.x} dx,
/// again for f = f_poly * e^{-|x|^2/4}.
Multivector<Cx> stft(const Polynomial<double>& f_poly, std::span<const double> t,
                     std::span<const double> w, Exec exec = Exec::parallel);

/// Both sides of (V f)(2t, -w) = e^{-|z|^2/2} e^{i t.w} (Bf)(z), z = t + iw.
struct StftBargmannCheck {
  Multivector<Cx> lhs;
  Multivector<Cx> rhs;
  double residual = 0.0;
};
StftBargmannCheck stft_bargmann_check(const Polynomial<double>& f_poly,
                                      std::span<const double> t, std::span<const double> w,
                                      Exec exec = Exec::parallel);

/// Inner product of the weighted L^2 module over C^m with weight
/// e^{-|z|^2} / pi^m, evaluated exactly through the monomial rule
/// <z^a, z^b> = delta_ab a!.
Multivector<Cx> fock_inner(const Polynomial<Cx>& f, const Polynomial<Cx>& g);

/// Same inner product by 2m-axis tensor quadrature (cross-validation path).
Multivector<Cx> fock_inner_quadrature(const Polynomial<Cx>& f, const Polynomial<Cx>& g,
                                      Exec exec = Exec::parallel);

/// ||P_s||^2 = sum_a |a_coeff|_0^2 a! for homogeneous P_s.
double fock_norm_sq_homogeneous(const Polynomial<Cx>& p);

/// lhs = |P_s(z)|_0^2 and rhs = ||P_s||^2 |z|^{2s} / s!; the contract is
/// lhs <= rhs.
struct PointwiseBound {
  double lhs_sq = 0.0;
  double rhs_sq = 0.0;
};
PointwiseBound pointwise_bound_check(const Polynomial<Cx>& p, std::span<const Cx> z);

/// Finite combination sum_i phi_{idx_i} c_i with right Clifford coefficients.
struct SpanElement {
  BasisIndex idx;
  Multivector<double> coeff;
};

Polynomial<double> span_polynomial(int m, std::span<const SpanElement> combo);
Polynomial<Cx> span_transform(int m, std::span<const SpanElement> combo);

/// <Bf, Bg> against (2 pi)^{-m/2} <f, g>.
struct IsometryCheck {
  Multivector<Cx> fock_side;
  Multivector<Cx> l2_side;
  double residual = 0.0;
};
IsometryCheck isometry_check(int m, std::span<const SpanElement> f,
                             std::span<const SpanElement> g, Exec exec = Exec::parallel);

/// Rigorous bound on the magnitude of the full dictionary series at z:
/// 2^m ||f|| sqrt((2 pi)^{-m/2} e^{(1+2^m)|z|^2}); nondecreasing in |z|.
double tail_bound(int m, double abs_z_sq, double norm_f);

/// Dictionary expansion (Bf)(z) = sum Psi_{l,k,j}(z) <phi_{l,k,j}, f> with
/// coefficients over all l <= lmax, k <= kmax in (l, k, j) order.
struct DictionaryExpansion {
  int m = 0;
  int lmax = 0;
  int kmax = 0;
  std::vector<std::pair<BasisIndex, Multivector<double>>> coeffs;
  double norm_f = 0.0;
  double tail_bound_unit_polydisc = 0.0;  // bound at |z|^2 = m

  /// Truncated series value, summed in the fixed index order.
  Multivector<Cx> evaluate(std::span<const Cx> z) const;
  double tail_bound_at(std::span<const Cx> z) const;
};

DictionaryExpansion expand(int m, const Polynomial<double>& f_poly, int lmax, int kmax,
                           Exec exec = Exec::parallel);

/// Closed form of the transform kernel,
/// T(x, z) = (2 pi)^{-m/2} exp(-z.z/2 + x.z - x.x/4); scalar-valued.
Cx kernel_closed(int m, std::span<const double> x, std::span<const Cx> z);

/// Truncated series sum phi_{l,k,j}(x) bar(Psi_{l,k,j}(z)) with the
/// complex-linear main involution on the Psi factor; converges to
/// kernel_closed as the caps grow.
Multivector<Cx> kernel_series(int m, std::span<const double> x, std::span<const Cx> z, int lmax,
                              int kmax);

}  // namespace csb
