#include "csb/bargmann.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace csb {

namespace {

double pow_2pi(double e) { return std::pow(2.0 * M_PI, e); }

double abs_sq(std::span<const Cx> z) {
  double s = 0.0;
  for (const auto& v : z) s += std::norm(v);
  return s;
}

double abs_sq(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

const Polynomial<Cx>& transform_exact(int m, const BasisIndex& idx) {
  if (idx.l < 0 || idx.k < 0) throw std::out_of_range("transform_exact: bad index");
  if (idx.j < 1 || idx.j > monogenic_dimension(m, idx.k))
    throw std::out_of_range("transform_exact: j out of range");

  using Key = std::tuple<int, int, int, int>;
  static std::map<Key, std::unique_ptr<Polynomial<Cx>>> cache;
  static std::shared_mutex mtx;
  const Key key{m, idx.l, idx.k, idx.j};
  {
    std::shared_lock lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }

  const MonogenicElement& mono = monogenic_basis(m, idx.k).elements[idx.j - 1];
  Polynomial<Cx> p = mono.exact.cast<Cx>();
  const auto zvec = Polynomial<Cx>::vector_variable(m);
  for (int i = 0; i < idx.l; ++i) p = zvec * p;
  const Cx scale(1.0 / std::sqrt(gamma_constant(idx.l, idx.k, m) * to_double(mono.norm_sq)), 0.0);
  auto out = std::make_unique<Polynomial<Cx>>(scale * p);

  std::unique_lock lock(mtx);
  auto [it, fresh] = cache.try_emplace(key, std::move(out));
  return *it->second;
}

Multivector<Cx> transform_numeric(const Polynomial<double>& f_poly, std::span<const Cx> z,
                                  Exec exec) {
  const int m = f_poly.vars();
  if (static_cast<int>(z.size()) != m)
    throw std::invalid_argument("transform_numeric: point length mismatch");
  // exp(-z.z/2 + x.z - x.x/4) e^{-|x|^2/4} = exp(-(x-z).(x-z)/2), so shift
  // the variance-1 rule by z (f_poly is entire).
  auto value = integrate_poly_gaussian_shifted(f_poly, z, exec);
  return value * Cx(pow_2pi(-0.5 * m), 0.0);
}

Multivector<Cx> stft(const Polynomial<double>& f_poly, std::span<const double> t,
                     std::span<const double> w, Exec exec) {
  const int m = f_poly.vars();
  if (static_cast<int>(t.size()) != m || static_cast<int>(w.size()) != m)
    throw std::invalid_argument("stft: point length mismatch");

  // Window times envelope re-centers the Gaussian at t/2; the modulation
  // e^{-i w.x} becomes a further imaginary shift of the rule.
  double tw = 0.0;
  for (int j = 0; j < m; ++j) tw += t[j] * w[j];
  std::vector<Cx> shift(m);
  for (int j = 0; j < m; ++j) shift[j] = Cx(0.5 * t[j], -w[j]);

  const Cx prefactor = pow_2pi(-0.5 * m) *
                       std::exp(Cx(-abs_sq(t) / 8.0 - abs_sq(w) / 2.0, -0.5 * tw));
  return integrate_poly_gaussian_shifted(f_poly, shift, exec) * prefactor;
}

StftBargmannCheck stft_bargmann_check(const Polynomial<double>& f_poly,
                                      std::span<const double> t, std::span<const double> w,
                                      Exec exec) {
  const int m = f_poly.vars();
  std::vector<double> t2(t.begin(), t.end());
  std::vector<double> wneg(w.begin(), w.end());
  for (auto& v : t2) v *= 2.0;
  for (auto& v : wneg) v = -v;

  std::vector<Cx> z(m);
  for (int j = 0; j < m; ++j) z[j] = Cx(t[j], w[j]);
  double tw = 0.0, zsq = 0.0;
  for (int j = 0; j < m; ++j) {
    tw += t[j] * w[j];
    zsq += std::norm(z[j]);
  }

  StftBargmannCheck out{Multivector<Cx>(m), Multivector<Cx>(m), 0.0};
  out.lhs = stft(f_poly, t2, wneg, exec);
  out.rhs = transform_numeric(f_poly, z, exec) * (std::exp(Cx(-0.5 * zsq, tw)));
  out.residual = norm0(out.lhs - out.rhs);
  return out;
}

Multivector<Cx> fock_inner(const Polynomial<Cx>& f, const Polynomial<Cx>& g) {
  if (f.vars() != g.vars() || f.alg_dim() != g.alg_dim())
    throw std::invalid_argument("fock_inner: dimension mismatch");
  Multivector<Cx> acc(f.alg_dim());
  for (const auto& [a, ca] : f.terms()) {
    const auto it = g.terms().find(a);
    if (it == g.terms().end()) continue;
    acc += (ca.dagger() * it->second) * Cx(to_double(a.factorial()), 0.0);
  }
  return acc;
}

Multivector<Cx> fock_inner_quadrature(const Polynomial<Cx>& f, const Polynomial<Cx>& g,
                                      Exec exec) {
  if (f.vars() != g.vars() || f.alg_dim() != g.alg_dim())
    throw std::invalid_argument("fock_inner_quadrature: dimension mismatch");
  const int m = f.vars();
  // f^dagger(z) g(z) as a polynomial in the 2m real coordinates, against
  // e^{-|z|^2} / pi^m (variance 1/2 per real axis).
  const auto fd = complex_to_real_coords(f.dagger(), /*conjugate_variables=*/true);
  const auto gr = complex_to_real_coords(g, /*conjugate_variables=*/false);
  auto value = integrate_cpoly_gaussian(fd * gr, 0.5, exec);
  return value * Cx(std::pow(M_PI, -m), 0.0);
}

double fock_norm_sq_homogeneous(const Polynomial<Cx>& p) {
  if (!p.is_zero() && !p.homogeneous_degree())
    throw std::invalid_argument("fock_norm_sq_homogeneous: input must be homogeneous");
  double s = 0.0;
  for (const auto& [a, c] : p.terms()) s += norm0_sq(c) * to_double(a.factorial());
  return s;
}

PointwiseBound pointwise_bound_check(const Polynomial<Cx>& p, std::span<const Cx> z) {
  const auto deg = p.homogeneous_degree();
  if (!deg) throw std::invalid_argument("pointwise_bound_check: input must be homogeneous");
  PointwiseBound out;
  out.lhs_sq = to_double(norm0_sq(p.evaluate(z)));
  out.rhs_sq = fock_norm_sq_homogeneous(p) / factorial(*deg) * std::pow(abs_sq(z), *deg);
  return out;
}

Polynomial<double> span_polynomial(int m, std::span<const SpanElement> combo) {
  Polynomial<double> out(m);
  for (const auto& el : combo) out = out + phi(m, el.idx).poly * el.coeff;
  return out;
}

Polynomial<Cx> span_transform(int m, std::span<const SpanElement> combo) {
  Polynomial<Cx> out(m);
  for (const auto& el : combo)
    out = out + transform_exact(m, el.idx) * el.coeff.cast<Cx>();
  return out;
}

IsometryCheck isometry_check(int m, std::span<const SpanElement> f,
                             std::span<const SpanElement> g, Exec exec) {
  IsometryCheck out{Multivector<Cx>(m), Multivector<Cx>(m), 0.0};
  out.fock_side = fock_inner(span_transform(m, f), span_transform(m, g));
  const auto l2 = l2_inner(span_polynomial(m, f), span_polynomial(m, g), exec);
  out.l2_side = l2.cast<Cx>() * Cx(pow_2pi(-0.5 * m), 0.0);
  out.residual = norm0(out.fock_side - out.l2_side);
  return out;
}

double tail_bound(int m, double abs_z_sq, double norm_f) {
  const double pw = std::exp2(m);  // 2^m
  return pw * norm_f * std::sqrt(pow_2pi(-0.5 * m) * std::exp((1.0 + pw) * abs_z_sq));
}

Multivector<Cx> DictionaryExpansion::evaluate(std::span<const Cx> z) const {
  Multivector<Cx> acc(m);
  for (const auto& [idx, c] : coeffs)
    acc += transform_exact(m, idx).evaluate(z) * c.cast<Cx>();
  return acc;
}

double DictionaryExpansion::tail_bound_at(std::span<const Cx> z) const {
  return tail_bound(m, abs_sq(z), norm_f);
}

DictionaryExpansion expand(int m, const Polynomial<double>& f_poly, int lmax, int kmax,
                           Exec exec) {
  DictionaryExpansion out;
  out.m = m;
  out.lmax = lmax;
  out.kmax = kmax;

  const auto idx = basis_indices(m, lmax, kmax);
  for (const auto& i : idx) (void)phi(m, i);  // warm cache before fan-out
  out.coeffs.resize(idx.size(), {BasisIndex{}, Multivector<double>(m)});
  parallel_for(
      idx.size(),
      [&](std::size_t i) {
        out.coeffs[i] = {idx[i], l2_inner(phi(m, idx[i]).poly, f_poly, Exec::serial)};
      },
      exec);

  out.norm_f = std::sqrt(std::max(0.0, l2_inner(f_poly, f_poly, exec).scalar_part()));
  out.tail_bound_unit_polydisc = tail_bound(m, static_cast<double>(m), out.norm_f);
  return out;
}

Cx kernel_closed(int m, std::span<const double> x, std::span<const Cx> z) {
  if (static_cast<int>(x.size()) != m || static_cast<int>(z.size()) != m)
    throw std::invalid_argument("kernel_closed: point length mismatch");
  Cx zz(0.0, 0.0), xz(0.0, 0.0);
  double xx = 0.0;
  for (int j = 0; j < m; ++j) {
    zz += z[j] * z[j];  // bilinear, no conjugation
    xz += x[j] * z[j];
    xx += x[j] * x[j];
  }
  return pow_2pi(-0.5 * m) * std::exp(-0.5 * zz + xz - 0.25 * xx);
}

Multivector<Cx> kernel_series(int m, std::span<const double> x, std::span<const Cx> z, int lmax,
                              int kmax) {
  if (static_cast<int>(x.size()) != m || static_cast<int>(z.size()) != m)
    throw std::invalid_argument("kernel_series: point length mismatch");
  const double envelope = std::exp(-0.25 * abs_sq(x));
  Multivector<Cx> acc(m);
  for (const auto& idx : basis_indices(m, lmax, kmax)) {
    const auto phi_val = phi(m, idx).poly.evaluate(x) * envelope;
    const auto psi_val = transform_exact(m, idx).evaluate(z);
    acc += phi_val.cast<Cx>() * psi_val.bar();
  }
  return acc;
}

}  // namespace csb
