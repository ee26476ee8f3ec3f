#include "csb/quadrature.hpp"

#include <Eigen/Dense>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace csb {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

double odd_double_factorial(int n) {  // (n-1)!! for even n >= 0
  double f = 1.0;
  for (int i = n - 1; i > 1; i -= 2) f *= i;
  return f;
}

/// Dense coefficient accumulator used by the grid kernels; fixed layout keeps
/// the blocked reduction bitwise deterministic.
template <class V>
struct DenseAcc {
  std::vector<V> c;
  DenseAcc() = default;
  explicit DenseAcc(std::size_t n) : c(n, V{}) {}
  DenseAcc& operator+=(const DenseAcc& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
};

/// Shared tensor-grid kernel: per-axis power tables over (scaled node +
/// shift), weights folded per axis, one pass over the flat node index.
template <class V, class S>
Multivector<V> poly_grid_integrate(const Polynomial<S>& p, int alg,
                                   const std::vector<std::vector<V>>& axis_base,
                                   const std::vector<double>& axis_weight, int nodes_per_axis,
                                   Exec exec) {
  const int d = p.vars();
  const int maxdeg = std::max(p.degree(), 0);

  struct Term {
    std::array<int, 2 * kMaxDim> e{};
    std::vector<std::pair<BladeIndex, S>> coeff;
  };
  std::vector<Term> terms;
  terms.reserve(p.term_count());
  for (const auto& [a, c] : p.terms()) {
    Term t;
    for (int j = 0; j < d; ++j) t.e[j] = a.e[j];
    for (std::size_t b = 0; b < c.size(); ++b) {
      const auto& s = c[static_cast<BladeIndex>(b)];
      if (!ScalarTraits<S>::is_zero(s)) t.coeff.emplace_back(static_cast<BladeIndex>(b), s);
    }
    terms.push_back(std::move(t));
  }

  // pow[j][i * (maxdeg+1) + e] = base_{j,i}^e
  std::vector<std::vector<V>> pw(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    pw[j].resize(static_cast<std::size_t>(nodes_per_axis) * (maxdeg + 1));
    for (int i = 0; i < nodes_per_axis; ++i) {
      V v = V(1.0);
      for (int e = 0; e <= maxdeg; ++e) {
        pw[j][static_cast<std::size_t>(i) * (maxdeg + 1) + e] = v;
        v *= axis_base[j][i];
      }
    }
  }

  std::size_t total = 1;
  for (int j = 0; j < d; ++j) total *= static_cast<std::size_t>(nodes_per_axis);

  const DenseAcc<V> zero(std::size_t{1} << alg);
  DenseAcc<V> sum = blocked_sum(
      total, zero,
      [&](std::size_t flat, DenseAcc<V>& acc) {
        std::array<int, 2 * kMaxDim> dig{};
        double w = 1.0;
        std::size_t rest = flat;
        for (int j = 0; j < d; ++j) {
          dig[j] = static_cast<int>(rest % static_cast<std::size_t>(nodes_per_axis));
          rest /= static_cast<std::size_t>(nodes_per_axis);
          w *= axis_weight[static_cast<std::size_t>(dig[j])];
        }
        for (const auto& t : terms) {
          V mono = V(w);
          for (int j = 0; j < d; ++j)
            mono *= pw[j][static_cast<std::size_t>(dig[j]) * (maxdeg + 1) + t.e[j]];
          for (const auto& [b, s] : t.coeff) acc.c[b] += mono * V(s);
        }
      },
      exec);

  Multivector<V> out(alg);
  for (std::size_t b = 0; b < sum.c.size(); ++b) out.set(static_cast<BladeIndex>(b), sum.c[b]);
  return out;
}

}  // namespace

QuadratureRule gauss_hermite(int n) {
  if (n < 1 || n > 64) throw std::out_of_range("gauss_hermite: need 1 <= n <= 64");
  QuadratureRule rule;
  rule.n = n;
  if (n == 1) {
    rule.nodes = {0.0};
    rule.weights = {kSqrtPi};
    return rule;
  }

  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    const double b = std::sqrt(i / 2.0);
    jacobi(i, i - 1) = b;
    jacobi(i - 1, i) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("gauss_hermite: eigensolve failed");

  // Orthonormal recurrence p_{k+1} = (x p_k - b_k p_{k-1}) / b_{k+1} with
  // b_k = sqrt(k/2), p_0 = pi^{-1/4}. Returns p_0..p_n at x.
  const auto eval_all = [n](double x, std::vector<double>& p) {
    p.resize(n + 1);
    p[0] = 1.0 / std::sqrt(kSqrtPi);
    if (n >= 1) p[1] = std::sqrt(2.0) * x * p[0];
    for (int k = 1; k < n; ++k)
      p[k + 1] = (x * p[k] - std::sqrt(k / 2.0) * p[k - 1]) / std::sqrt((k + 1) / 2.0);
  };

  rule.nodes.resize(n);
  rule.weights.resize(n);
  std::vector<double> p;
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()(i);  // ascending
    // two Newton steps on p_n, using p_n' = sqrt(2n) p_{n-1}
    for (int it = 0; it < 2; ++it) {
      eval_all(x, p);
      x -= p[n] / (std::sqrt(2.0 * n) * p[n - 1]);
    }
    eval_all(x, p);
    double christoffel = 0.0;
    for (int k = 0; k < n; ++k) christoffel += p[k] * p[k];
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / christoffel;
  }
  // The rule is symmetric; enforce it exactly so downstream parity arguments
  // hold to the last bit.
  for (int i = 0; i < n / 2; ++i) {
    const int j = n - 1 - i;
    const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    rule.nodes[j] = x;
    rule.nodes[i] = -x;
    const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.weights[i] = rule.weights[j] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

namespace {
std::atomic<int> g_min_rule_size{0};
}  // namespace

void set_min_rule_size(int n) {
  if (n < 0 || n > 64) throw std::out_of_range("set_min_rule_size: need 0 <= n <= 64");
  g_min_rule_size.store(n);
}

const QuadratureRule& auto_rule_for_degree(int degree) {
  const int n = std::max({1, (std::max(degree, 0) + 3) / 2,  // ceil((deg+2)/2)
                          g_min_rule_size.load()});
  static std::map<int, QuadratureRule> cache;
  static std::shared_mutex mtx;
  {
    std::shared_lock lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::unique_lock lock(mtx);
  return cache.try_emplace(n, gauss_hermite(n)).first->second;
}

double gaussian_monomial_moment(const MultiIndex& alpha, double sigma_sq) {
  const double sigma = std::sqrt(sigma_sq);
  double out = 1.0;
  for (int a : alpha.e) {
    if (a % 2 == 1) return 0.0;
    out *= odd_double_factorial(a) * std::pow(sigma, a + 1) * std::sqrt(2.0 * M_PI);
  }
  return out;
}

Rational gaussian_monomial_moment_unit(const MultiIndex& alpha) {
  BigInt out = 1;
  for (int a : alpha.e) {
    if (a % 2 == 1) return Rational(0);
    for (int i = a - 1; i > 1; i -= 2) out *= i;
  }
  return Rational(out);
}

Multivector<double> integrate_poly_gaussian(const Polynomial<double>& p, double sigma_sq,
                                            Exec exec) {
  if (p.is_zero()) return Multivector<double>::zero(p.alg_dim());
  const QuadratureRule& rule = auto_rule_for_degree(p.degree());
  const double scale = std::sqrt(2.0 * sigma_sq);

  std::vector<std::vector<double>> base(p.vars());
  std::vector<double> ws(rule.n);
  for (int i = 0; i < rule.n; ++i) ws[i] = scale * rule.weights[i];
  for (int j = 0; j < p.vars(); ++j) {
    base[j].resize(rule.n);
    for (int i = 0; i < rule.n; ++i) base[j][i] = scale * rule.nodes[i];
  }
  return poly_grid_integrate<double>(p, p.alg_dim(), base, ws, rule.n, exec);
}

Multivector<std::complex<double>> integrate_poly_gaussian_shifted(
    const Polynomial<double>& p, std::span<const std::complex<double>> shift, Exec exec) {
  if (static_cast<int>(shift.size()) != p.vars())
    throw std::invalid_argument("integrate_poly_gaussian_shifted: shift length mismatch");
  if (p.is_zero()) return Multivector<std::complex<double>>::zero(p.alg_dim());
  const QuadratureRule& rule = auto_rule_for_degree(p.degree());
  const double scale = std::sqrt(2.0);  // envelope e^{-|u|^2/2}

  std::vector<std::vector<std::complex<double>>> base(p.vars());
  std::vector<double> ws(rule.n);
  for (int i = 0; i < rule.n; ++i) ws[i] = scale * rule.weights[i];
  for (int j = 0; j < p.vars(); ++j) {
    base[j].resize(rule.n);
    for (int i = 0; i < rule.n; ++i) base[j][i] = scale * rule.nodes[i] + shift[j];
  }
  const auto pc = p.cast<std::complex<double>>();
  return poly_grid_integrate<std::complex<double>>(pc, p.alg_dim(), base, ws, rule.n, exec);
}

Multivector<std::complex<double>> integrate_cpoly_gaussian(
    const Polynomial<std::complex<double>>& p, double sigma_sq, Exec exec) {
  if (p.is_zero()) return Multivector<std::complex<double>>::zero(p.alg_dim());
  const QuadratureRule& rule = auto_rule_for_degree(p.degree());
  const double scale = std::sqrt(2.0 * sigma_sq);

  std::vector<std::vector<std::complex<double>>> base(p.vars());
  std::vector<double> ws(rule.n);
  for (int i = 0; i < rule.n; ++i) ws[i] = scale * rule.weights[i];
  for (int j = 0; j < p.vars(); ++j) {
    base[j].resize(rule.n);
    for (int i = 0; i < rule.n; ++i) base[j][i] = scale * rule.nodes[i];
  }
  return poly_grid_integrate<std::complex<double>>(p, p.alg_dim(), base, ws, rule.n, exec);
}

Polynomial<std::complex<double>> complex_to_real_coords(
    const Polynomial<std::complex<double>>& f, bool conjugate_variables) {
  using C = std::complex<double>;
  const int m = f.vars();
  const int alg = f.alg_dim();
  const C iunit = conjugate_variables ? C(0.0, -1.0) : C(0.0, 1.0);

  Polynomial<C> out(2 * m, alg);
  for (const auto& [a, c] : f.terms()) {
    // expand prod_j (x_j + i y_j)^{a_j} one factor at a time
    Polynomial<C> term = Polynomial<C>::monomial(MultiIndex(2 * m), c);
    for (int j = 0; j < m; ++j) {
      if (a.e[j] == 0) continue;
      MultiIndex xj(2 * m), yj(2 * m);
      xj.e[j] = 1;
      yj.e[m + j] = 1;
      auto zj = Polynomial<C>::monomial(xj, Multivector<C>::scalar(alg, C(1.0))) +
                Polynomial<C>::monomial(yj, Multivector<C>::scalar(alg, iunit));
      for (int rep = 0; rep < a.e[j]; ++rep) term = term * zj;
    }
    out = out + term;
  }
  return out;
}

}  // namespace csb
