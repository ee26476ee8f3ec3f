#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "csb/quadrature.hpp"
#include "oracles.hpp"

using namespace csb;

namespace {

const double kSqrtPi = std::sqrt(M_PI);

// int u^{2q} e^{-u^2} du = (2q-1)!!/2^q sqrt(pi)  (hand formula, not library)
double even_hermite_moment(int q) {
  double v = kSqrtPi;
  for (int i = 2 * q - 1; i > 1; i -= 2) v *= i;
  return v / std::pow(2.0, q);
}

}  // namespace

TEST_CASE("gauss_hermite: pinned small rules") {
  const auto r1 = gauss_hermite(1);
  CHECK(r1.nodes[0] == 0.0);
  CHECK(r1.weights[0] == doctest::Approx(kSqrtPi).epsilon(1e-15));

  const auto r2 = gauss_hermite(2);
  CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(r2.nodes[1] == doctest::Approx(+1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(r2.weights[0] == doctest::Approx(kSqrtPi / 2).epsilon(1e-14));
  CHECK(r2.weights[1] == doctest::Approx(kSqrtPi / 2).epsilon(1e-14));

  const auto r3 = gauss_hermite(3);
  CHECK(r3.nodes[1] == 0.0);
  CHECK(r3.nodes[0] == doctest::Approx(-std::sqrt(1.5)).epsilon(1e-14));
  CHECK(r3.nodes[2] == doctest::Approx(+std::sqrt(1.5)).epsilon(1e-14));
  CHECK(r3.weights[1] == doctest::Approx(2.0 * kSqrtPi / 3.0).epsilon(1e-14));
  CHECK(r3.weights[0] == doctest::Approx(kSqrtPi / 6.0).epsilon(1e-14));
  CHECK(r3.weights[2] == doctest::Approx(kSqrtPi / 6.0).epsilon(1e-14));

  CHECK_THROWS_AS(gauss_hermite(0), std::out_of_range);
  CHECK_THROWS_AS(gauss_hermite(65), std::out_of_range);
}

TEST_CASE("gauss_hermite: mass, symmetry and degree-(2n-1) exactness") {
  for (int n : {1, 2, 3, 5, 8, 13, 21, 34, 64}) {
    const auto r = gauss_hermite(n);
    double mass = 0.0;
    for (double w : r.weights) mass += w;
    CHECK(mass == doctest::Approx(kSqrtPi).epsilon(1e-13));
    for (int i = 0; i < n; ++i) {
      CHECK(r.nodes[i] == -r.nodes[n - 1 - i]);
      CHECK(r.weights[i] == r.weights[n - 1 - i]);
    }
    // all monomials up to degree 2n-1 against the closed-form moments;
    // tolerance scales with the uncancelled sum of magnitudes
    for (int d = 0; d <= 2 * n - 1; ++d) {
      double got = 0.0, mag = 0.0;
      for (int i = 0; i < n; ++i) {
        const double term = r.weights[i] * std::pow(r.nodes[i], d);
        got += term;
        mag += std::abs(term);
      }
      const double want = (d % 2 == 1) ? 0.0 : even_hermite_moment(d / 2);
      CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, mag));
    }
  }
}

TEST_CASE("integrate_gaussian: pinned masses and moments") {
  const auto& rule = auto_rule_for_degree(2);

  // d=1, sigma^2=1: mass sqrt(2 pi), second moment sqrt(2 pi)
  auto mass = integrate_gaussian(
      1, 1.0, rule, 0.0, [](std::span<const double>, double w, double& acc) { acc += w; });
  CHECK(mass == doctest::Approx(std::sqrt(2 * M_PI)).epsilon(1e-14));

  auto second = integrate_gaussian(
      1, 1.0, rule, 0.0,
      [](std::span<const double> u, double w, double& acc) { acc += w * u[0] * u[0]; });
  CHECK(second == doctest::Approx(std::sqrt(2 * M_PI)).epsilon(1e-14));

  // d=m, sigma^2=2: int e^{-|x|^2/4} dx = (4 pi)^{m/2}
  for (int m = 1; m <= 3; ++m) {
    auto v = integrate_gaussian(
        m, 2.0, rule, 0.0, [](std::span<const double>, double w, double& acc) { acc += w; });
    CHECK(v == doctest::Approx(std::pow(4.0 * M_PI, 0.5 * m)).epsilon(1e-13));
  }
}

TEST_CASE("gaussian_monomial_moment: pinned values and quadrature cross-check") {
  CHECK(gaussian_monomial_moment(MultiIndex{1, 2}, 1.0) == 0.0);
  CHECK(gaussian_monomial_moment(MultiIndex{2, 0}, 1.0) ==
        doctest::Approx(2.0 * M_PI).epsilon(1e-14));
  CHECK(gaussian_monomial_moment(MultiIndex{0, 0}, 1.0) ==
        doctest::Approx(2.0 * M_PI).epsilon(1e-14));
  CHECK(gaussian_monomial_moment_unit(MultiIndex{4, 2}) == Rational(3));
  CHECK(gaussian_monomial_moment_unit(MultiIndex{3, 2}) == Rational(0));

  oracle::Rng rng(61);
  for (int rep = 0; rep < 10; ++rep) {
    MultiIndex a{2 * rng.below(3), 2 * rng.below(3), 2 * rng.below(2)};
    const double sig = 0.5 + rng.unit();
    const auto& rule = auto_rule_for_degree(a.degree());
    auto got = integrate_gaussian(3, sig, rule, 0.0,
                                  [&](std::span<const double> u, double w, double& acc) {
                                    double mono = 1.0;
                                    for (int j = 0; j < 3; ++j)
                                      for (int i = 0; i < a.e[j]; ++i) mono *= u[j];
                                    acc += w * mono;
                                  });
    const double want = gaussian_monomial_moment(a, sig);
    CHECK(got == doctest::Approx(want).epsilon(1e-12).scale(std::max(1.0, want)));
  }
}

TEST_CASE("tensor consistency: separable integrands factor") {
  // f(u) = u_1^2 * 1 * u_3^4 over R^3
  const auto& rule = auto_rule_for_degree(6);
  auto v3 = integrate_gaussian(3, 1.0, rule, 0.0,
                               [](std::span<const double> u, double w, double& acc) {
                                 acc += w * u[0] * u[0] * u[2] * u[2] * u[2] * u[2];
                               });
  const double m2 = gaussian_monomial_moment(MultiIndex{2}, 1.0);
  const double m0 = gaussian_monomial_moment(MultiIndex{0}, 1.0);
  const double m4 = gaussian_monomial_moment(MultiIndex{4}, 1.0);
  CHECK(v3 == doctest::Approx(m2 * m0 * m4).epsilon(1e-13));
}

TEST_CASE("integrate_poly_gaussian: agrees with closed-form moments") {
  oracle::Rng rng(67);
  for (int m = 2; m <= 3; ++m) {
    const PolyD p = oracle::random_polyq(rng, m, 4, 8).cast<double>();
    const MvD got = integrate_poly_gaussian(p, 1.0);
    MvD want(m);
    for (const auto& [a, c] : p.terms()) want += c * gaussian_monomial_moment(a, 1.0);
    CHECK(norm0(got - want) <= 1e-12 * std::max(1.0, norm0(want)));
  }
}

TEST_CASE("integrate_poly_gaussian_shifted: symbolic substitution oracle") {
  oracle::Rng rng(71);
  const int m = 2;
  const PolyD p = oracle::random_polyq(rng, m, 4, 6).cast<double>();
  std::vector<std::complex<double>> shift{{0.4, -0.7}, {-0.2, 0.3}};

  // independent route: substitute u -> u + s symbolically, then use moments
  PolyC shifted(m);
  for (const auto& [a, c] : p.terms()) {
    PolyC term = PolyC::constant(c.cast<std::complex<double>>());
    for (int j = 0; j < m; ++j) {
      MultiIndex uj(m);
      uj.e[j] = 1;
      const PolyC fact = PolyC::monomial(uj, MvC::scalar(m, 1.0)) +
                         PolyC::constant(MvC::scalar(m, shift[j]));
      for (int rep = 0; rep < a.e[j]; ++rep) term = term * fact;
    }
    shifted = shifted + term;
  }
  MvC want(m);
  for (const auto& [a, c] : shifted.terms())
    want += c * std::complex<double>(gaussian_monomial_moment(a, 1.0), 0.0);

  const MvC got = integrate_poly_gaussian_shifted(
      p, std::span<const std::complex<double>>(shift.data(), shift.size()));
  CHECK(norm0(got - want) <= 1e-12 * std::max(1.0, norm0(want)));
}

TEST_CASE("parallel and serial paths are bitwise identical") {
  oracle::Rng rng(73);
  const int m = 3;
  const PolyD p = oracle::random_polyq(rng, m, 6, 10).cast<double>();

  const MvD a = integrate_poly_gaussian(p, 1.0, Exec::serial);
  const MvD b = integrate_poly_gaussian(p, 1.0, Exec::parallel);
  CHECK(a == b);

  std::vector<std::complex<double>> shift{{0.1, 0.2}, {-0.3, 0.4}, {0.5, -0.6}};
  const MvC c = integrate_poly_gaussian_shifted(
      p, std::span<const std::complex<double>>(shift.data(), shift.size()), Exec::serial);
  const MvC d = integrate_poly_gaussian_shifted(
      p, std::span<const std::complex<double>>(shift.data(), shift.size()), Exec::parallel);
  CHECK(c == d);

  const PolyC pc = p.cast<std::complex<double>>();
  const MvC e = integrate_cpoly_gaussian(pc, 0.5, Exec::serial);
  const MvC f = integrate_cpoly_gaussian(pc, 0.5, Exec::parallel);
  CHECK(e == f);
}

TEST_CASE("complex_to_real_coords: evaluation agreement") {
  oracle::Rng rng(79);
  const int m = 2;
  PolyC f(m);
  for (int t = 0; t < 5; ++t) {
    MultiIndex a{rng.below(3), rng.below(3)};
    f.add_term(a, oracle::random_mvc(rng, m));
  }
  const auto fr = complex_to_real_coords(f, false);
  const auto fc = complex_to_real_coords(f, true);
  for (int rep = 0; rep < 5; ++rep) {
    std::vector<double> xy(2 * m);
    for (auto& v : xy) v = rng.pm1();
    std::vector<std::complex<double>> z(m), zc(m);
    for (int j = 0; j < m; ++j) {
      z[j] = {xy[j], xy[m + j]};
      zc[j] = std::conj(z[j]);
    }
    std::vector<std::complex<double>> xyc(xy.begin(), xy.end());
    auto fz = f.evaluate(std::span<const std::complex<double>>(z.data(), z.size()));
    auto fxy = fr.evaluate(std::span<const std::complex<double>>(xyc.data(), xyc.size()));
    CHECK(norm0(fz - fxy) <= 1e-12);

    auto fzc = f.evaluate(std::span<const std::complex<double>>(zc.data(), zc.size()));
    auto fxyc = fc.evaluate(std::span<const std::complex<double>>(xyc.data(), xyc.size()));
    CHECK(norm0(fzc - fxyc) <= 1e-12);
  }
}
