#include "csb/hermite.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace csb {

double gamma_constant(int l, int k, int m) {
  if (l < 0 || k < 0) throw std::invalid_argument("gamma_constant: need l, k >= 0");
  if (m < 1) throw std::invalid_argument("gamma_constant: need m >= 1");
  const int p = l / 2;
  const bool odd = (l % 2 == 1);
  double lg = (2 * p + 0.5 * m + k + (odd ? 1 : 0)) * std::log(2.0) + std::lgamma(p + 1.0) +
              0.5 * m * std::log(M_PI) + std::lgamma(0.5 * m + k + p + (odd ? 1.0 : 0.0)) -
              std::lgamma(0.5 * m);
  return std::exp(lg);
}

const HermiteFunction& phi(int m, const BasisIndex& idx) {
  if (idx.l < 0 || idx.k < 0) throw std::out_of_range("phi: bad index");
  if (idx.j < 1 || idx.j > monogenic_dimension(m, idx.k)) throw std::out_of_range("phi: j out of range");
  if (idx.l + idx.k > kDegreeCap) throw std::invalid_argument("phi: degree cap exceeded");

  using Key = std::tuple<int, int, int, int>;
  static std::map<Key, std::unique_ptr<HermiteFunction>> cache;
  static std::shared_mutex mtx;
  const Key key{m, idx.l, idx.k, idx.j};
  {
    std::shared_lock lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }

  // Exact Rodrigues iteration on the unnormalized rational representative;
  // the normalizers 1/sqrt(gamma_{l,k} * |P|^2) fold into one double scale.
  const MonogenicElement& mono = monogenic_basis(m, idx.k).elements[idx.j - 1];
  auto hp = hermite_times_monogenic(idx.l, mono.exact);
  const double scale =
      1.0 / std::sqrt(gamma_constant(idx.l, idx.k, m) * to_double(mono.norm_sq));

  auto fn = std::make_unique<HermiteFunction>(HermiteFunction{idx, scale * hp.cast<double>()});

  std::unique_lock lock(mtx);
  auto [it, fresh] = cache.try_emplace(key, std::move(fn));
  return *it->second;
}

std::vector<BasisIndex> basis_indices(int m, int lmax, int kmax) {
  std::vector<BasisIndex> out;
  for (int l = 0; l <= lmax; ++l)
    for (int k = 0; k <= kmax; ++k) {
      const auto dim = monogenic_dimension(m, k);
      for (int j = 1; j <= dim; ++j) out.push_back({l, k, j});
    }
  return out;
}

Multivector<double> l2_inner(const Polynomial<double>& f_poly, const Polynomial<double>& g_poly,
                             Exec exec) {
  // two e^{-|x|^2/4} envelopes combine to the variance-1 weight e^{-|x|^2/2}
  return integrate_poly_gaussian(f_poly.bar() * g_poly, 1.0, exec);
}

std::vector<std::vector<double>> gram_matrix(int m, int lmax, int kmax, Exec exec) {
  const auto idx = basis_indices(m, lmax, kmax);
  const std::size_t n = idx.size();
  std::vector<std::vector<double>> g(n, std::vector<double>(n, 0.0));

  // warm the caches serially so the fan-out below only reads
  for (const auto& i : idx) (void)phi(m, i);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) pairs.emplace_back(r, c);

  parallel_for(
      pairs.size(),
      [&](std::size_t t) {
        const auto [r, c] = pairs[t];
        const double v =
            l2_inner(phi(m, idx[r]).poly, phi(m, idx[c]).poly, Exec::serial).scalar_part();
        g[r][c] = v;
        g[c][r] = v;
      },
      exec);
  return g;
}

}  // namespace csb
