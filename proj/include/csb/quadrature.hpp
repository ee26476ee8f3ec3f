#pragma once

#include <array>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "csb/exec.hpp"
#include "csb/polynomial.hpp"

namespace csb {

/// One-dimensional Gauss-Hermite rule for the weight e^{-u^2}:
/// sum w_i f(u_i) = int f(u) e^{-u^2} du exactly for deg f <= 2n-1.
struct QuadratureRule {
  int n = 0;
  std::vector<double> nodes;    // ascending, symmetric about 0
  std::vector<double> weights;  // positive, sum = sqrt(pi)
};

/// Golub-Welsch nodes/weights from the Jacobi matrix (1 <= n <= 64).
QuadratureRule gauss_hermite(int n);

/// Smallest cached rule that integrates polynomials of the given total
/// degree exactly: n = ceil((deg+2)/2) per axis, raised to any floor set
/// with set_min_rule_size.
const QuadratureRule& auto_rule_for_degree(int degree);

/// Floor for automatically chosen rule sizes (0 restores pure auto sizing).
void set_min_rule_size(int n);

inline bool rule_exact_for_degree(const QuadratureRule& rule, int degree) {
  return degree <= 2 * rule.n - 1;
}

/// Closed-form int x^a e^{-|x|^2/(2 s^2)} dx over R^m; zero if any exponent
/// is odd, otherwise prod (a_j-1)!! s^{a_j+1} sqrt(2 pi).
double gaussian_monomial_moment(const MultiIndex& alpha, double sigma_sq);

/// Exact variant at s^2 = 1: the moment equals r * (2 pi)^{m/2} with the
/// returned rational r = prod (a_j - 1)!! (zero if any exponent is odd).
Rational gaussian_monomial_moment_unit(const MultiIndex& alpha);

/// Tensor-product integration of f against e^{-|u|^2/(2 sigma_sq)} over R^d.
/// term(point, w, acc) must add w * f(point) into acc; the node weight w
/// already carries the change-of-variables volume factor. Reduction order is
/// fixed (ascending flat node index), so results do not depend on Exec.
template <class Acc, class TermFn>
Acc integrate_gaussian(int d, double sigma_sq, const QuadratureRule& rule, const Acc& zero,
                       TermFn&& term, Exec exec = Exec::parallel) {
  if (d < 1 || d > 2 * kMaxDim) throw std::invalid_argument("integrate_gaussian: bad axis count");
  const int n = rule.n;
  const double scale = std::sqrt(2.0 * sigma_sq);
  std::size_t total = 1;
  for (int j = 0; j < d; ++j) total *= static_cast<std::size_t>(n);

  return blocked_sum(
      total, zero,
      [&](std::size_t flat, Acc& acc) {
        std::array<double, 2 * kMaxDim> pt{};
        double w = 1.0;
        std::size_t rest = flat;
        for (int j = 0; j < d; ++j) {
          const auto i = static_cast<int>(rest % static_cast<std::size_t>(n));
          rest /= static_cast<std::size_t>(n);
          pt[j] = scale * rule.nodes[i];
          w *= scale * rule.weights[i];
        }
        term(std::span<const double>(pt.data(), static_cast<std::size_t>(d)), w, acc);
      },
      exec);
}

/// int p(x) e^{-|x|^2/(2 sigma_sq)} dx with an automatically sized rule.
Multivector<double> integrate_poly_gaussian(const Polynomial<double>& p, double sigma_sq,
                                            Exec exec = Exec::parallel);

/// int e^{-|u|^2/2} p(u + shift) du for a complex shift. p is entire, so the
/// contour-shifted Gaussian integral is evaluated on the real rule with
/// complex-displaced nodes; exact up to the rule degree.
Multivector<std::complex<double>> integrate_poly_gaussian_shifted(
    const Polynomial<double>& p, std::span<const std::complex<double>> shift,
    Exec exec = Exec::parallel);

/// Same grid kernel for a complex-coefficient polynomial over R^d (d = vars).
Multivector<std::complex<double>> integrate_cpoly_gaussian(
    const Polynomial<std::complex<double>>& p, double sigma_sq, Exec exec = Exec::parallel);

/// Rewrite a polynomial in z over C^m as a polynomial in the 2m real
/// coordinates (x_1..x_m, y_1..y_m), z_j = x_j + i y_j (or its conjugate).
Polynomial<std::complex<double>> complex_to_real_coords(
    const Polynomial<std::complex<double>>& f, bool conjugate_variables);

}  // namespace csb
