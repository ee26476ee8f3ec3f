#include "csb/monogenics.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace csb {

namespace {

Rational pochhammer_half(int m, int k) {  // (m/2)(m/2+1)...(m/2+k-1)
  Rational p(1);
  const Rational half_m = Rational(m) / 2;
  for (int i = 0; i < k; ++i) p *= half_m + i;
  return p;
}

std::vector<BladeIndex> even_blades(int m) {
  std::vector<BladeIndex> out;
  for (BladeIndex b = 0; b < (1u << m); ++b)
    if (blade_grade(b) % 2 == 0) out.push_back(b);
  return out;
}

/// Flat coordinates of an even-coefficient homogeneous polynomial over the
/// (monomial, even blade) grid used by the solver.
std::vector<Rational> flatten(const Polynomial<Rational>& p,
                              const std::map<MultiIndex, int, GradedLexLess>& mon_ix,
                              const std::vector<BladeIndex>& blades) {
  std::vector<Rational> v(mon_ix.size() * blades.size(), Rational(0));
  for (const auto& [a, c] : p.terms()) {
    const int mi = mon_ix.at(a);
    for (std::size_t bi = 0; bi < blades.size(); ++bi)
      v[static_cast<std::size_t>(mi) * blades.size() + bi] = c[blades[bi]];
  }
  return v;
}

/// Incremental exact row reduction; tracks an independent row basis.
class RationalRowSpace {
 public:
  explicit RationalRowSpace(std::size_t cols) : cols_(cols) {}

  std::size_t rank() const { return rows_.size(); }

  /// Reduce v against the basis; returns true (and absorbs it) if v added
  /// a new direction.
  bool insert(std::vector<Rational> v) {
    reduce(v);
    std::size_t lead = cols_;
    for (std::size_t j = 0; j < cols_; ++j)
      if (v[j] != 0) {
        lead = j;
        break;
      }
    if (lead == cols_) return false;
    const Rational inv = Rational(1) / v[lead];
    for (std::size_t j = lead; j < cols_; ++j) v[j] *= inv;
    rows_.push_back(std::move(v));
    leads_.push_back(lead);
    return true;
  }

  bool contains(std::vector<Rational> v) const {
    reduce(v);
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }

  void truncate(std::size_t rank) {
    rows_.resize(rank);
    leads_.resize(rank);
  }

 private:
  void reduce(std::vector<Rational>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational f = v[leads_[r]];
      if (f == 0) continue;
      for (std::size_t j = leads_[r]; j < cols_; ++j) v[j] -= f * rows_[r][j];
    }
  }

  std::size_t cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> leads_;
};

}  // namespace

long long monogenic_dimension(int m, int k) {
  if (m < 1 || k < 0) throw std::invalid_argument("monogenic_dimension: need m >= 1, k >= 0");
  if (k == 0) return 1;
  // C(m+k-2, k)
  long long num = 1, den = 1;
  for (int i = 1; i <= k; ++i) {
    num *= (m - 2 + i);
    den *= i;
  }
  return num / den;
}

Multivector<Rational> sphere_pairing_exact(const Polynomial<Rational>& p,
                                           const Polynomial<Rational>& q) {
  const int m = p.alg_dim();
  const auto dp = p.homogeneous_degree();
  const auto dq = q.homogeneous_degree();
  if (!dp || !dq || *dp != *dq)
    throw std::invalid_argument("sphere_pairing: inputs must be homogeneous of equal degree");
  const int k = *dp;

  // (1/A_m) int_S bar(P) Q dS
  //   = int bar(P) Q e^{-|x|^2/2} dx / (A_m 2^{k+m/2-1} Gamma(k+m/2))
  // and the Gaussian integral is (2 pi)^{m/2} times a rational, so the
  // (2 pi)^{m/2} factors cancel into 2^{-k} / poch(m/2, k).
  Multivector<Rational> acc(m);
  for (const auto& [a, ca] : p.terms())
    for (const auto& [b, cb] : q.terms()) {
      MultiIndex ab(m);
      for (int j = 0; j < m; ++j) ab.e[j] = a.e[j] + b.e[j];
      const Rational mom = gaussian_monomial_moment_unit(ab);
      if (mom == 0) continue;
      acc += (ca.bar() * cb) * mom;
    }
  const Rational two_k(boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(k)));
  Rational scale = Rational(1) / (pochhammer_half(m, k) * two_k);
  return acc * scale;
}

Multivector<double> sphere_pairing(const Polynomial<double>& p, const Polynomial<double>& q) {
  const int m = p.alg_dim();
  const auto dp = p.homogeneous_degree();
  const auto dq = q.homogeneous_degree();
  if (!dp || !dq || *dp != *dq)
    throw std::invalid_argument("sphere_pairing: inputs must be homogeneous of equal degree");
  const int k = *dp;

  Multivector<double> acc(m);
  for (const auto& [a, ca] : p.terms())
    for (const auto& [b, cb] : q.terms()) {
      MultiIndex ab(m);
      for (int j = 0; j < m; ++j) ab.e[j] = a.e[j] + b.e[j];
      const Rational mom = gaussian_monomial_moment_unit(ab);
      if (mom == 0) continue;
      acc += (ca.bar() * cb) * to_double(mom);
    }
  double scale = 1.0;
  for (int i = 0; i < k; ++i) scale /= 2.0 * (0.5 * m + i);
  return acc * scale;
}

MonogenicBasis build_monogenic_basis(int m, int k) {
  if (m < 2) throw std::invalid_argument("build_monogenic_basis: need m >= 2");
  if (k < 0 || k > kDegreeCap) throw std::invalid_argument("build_monogenic_basis: bad k");

  MonogenicBasis basis;
  basis.m = m;
  basis.k = k;

  const long long want = monogenic_dimension(m, k);

  if (k == 0) {
    MonogenicElement e{Polynomial<Rational>::constant(Multivector<Rational>::scalar(m, 1)),
                       Rational(1), Polynomial<double>::constant(Multivector<double>::scalar(m, 1.0))};
    basis.elements.push_back(std::move(e));
    return basis;
  }

  const auto mons = monomials_of_degree(m, k);
  const auto blades = even_blades(m);
  std::map<MultiIndex, int, GradedLexLess> mon_ix;
  for (std::size_t i = 0; i < mons.size(); ++i) mon_ix.emplace(mons[i], static_cast<int>(i));

  const std::size_t ncols = mons.size() * blades.size();
  std::map<BladeIndex, std::size_t> blade_pos;
  for (std::size_t bi = 0; bi < blades.size(); ++bi) blade_pos.emplace(blades[bi], bi);

  // Rows of D P = 0 indexed by (degree k-1 monomial, target blade).
  const auto tgt_mons = monomials_of_degree(m, k - 1);
  std::map<MultiIndex, int, GradedLexLess> tgt_ix;
  for (std::size_t i = 0; i < tgt_mons.size(); ++i) tgt_ix.emplace(tgt_mons[i], static_cast<int>(i));
  const std::size_t nrows = tgt_mons.size() * (std::size_t{1} << m);

  std::vector<std::vector<Rational>> mat(nrows, std::vector<Rational>(ncols, Rational(0)));
  for (std::size_t mi = 0; mi < mons.size(); ++mi) {
    const MultiIndex& a = mons[mi];
    for (std::size_t bi = 0; bi < blades.size(); ++bi) {
      const std::size_t col = mi * blades.size() + bi;
      for (int j = 0; j < m; ++j) {
        if (a.e[j] == 0) continue;
        MultiIndex b = a;
        b.e[j] -= 1;
        const auto [sign, tgt] = blade_product(1u << j, blades[bi], m);
        const std::size_t row =
            static_cast<std::size_t>(tgt_ix.at(b)) * (std::size_t{1} << m) + tgt;
        mat[row][col] += Rational(sign * a.e[j]);
      }
    }
  }

  // Exact Gauss-Jordan; null space from the free columns.
  std::vector<std::size_t> pivot_of_col(ncols, SIZE_MAX);
  std::size_t prow = 0;
  for (std::size_t col = 0; col < ncols && prow < nrows; ++col) {
    std::size_t sel = SIZE_MAX;
    for (std::size_t r = prow; r < nrows; ++r)
      if (mat[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel == SIZE_MAX) continue;
    std::swap(mat[prow], mat[sel]);
    const Rational inv = Rational(1) / mat[prow][col];
    for (std::size_t j = col; j < ncols; ++j) mat[prow][j] *= inv;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == prow) continue;
      const Rational f = mat[r][col];
      if (f == 0) continue;
      for (std::size_t j = col; j < ncols; ++j) mat[r][j] -= f * mat[prow][j];
    }
    pivot_of_col[col] = prow;
    ++prow;
  }

  std::vector<std::vector<Rational>> null_basis;
  for (std::size_t fc = 0; fc < ncols; ++fc) {
    if (pivot_of_col[fc] != SIZE_MAX) continue;
    std::vector<Rational> v(ncols, Rational(0));
    v[fc] = 1;
    for (std::size_t c = 0; c < ncols; ++c)
      if (pivot_of_col[c] != SIZE_MAX) v[c] = -mat[pivot_of_col[c]][fc];
    null_basis.push_back(std::move(v));
  }

  auto unflatten = [&](const std::vector<Rational>& v) {
    Polynomial<Rational> p(m);
    for (std::size_t mi = 0; mi < mons.size(); ++mi) {
      Multivector<Rational> c(m);
      bool nz = false;
      for (std::size_t bi = 0; bi < blades.size(); ++bi) {
        const Rational& x = v[mi * blades.size() + bi];
        if (x == 0) continue;
        c.set(blades[bi], x);
        nz = true;
      }
      if (nz) p.add_term(mons[mi], std::move(c));
    }
    return p;
  };

  // Extract right-module generators over the even subalgebra: keep a null
  // vector only if it leaves the span of the multiples of those already kept.
  RationalRowSpace span(ncols);
  std::vector<Polynomial<Rational>> gens;
  for (const auto& v : null_basis) {
    if (static_cast<long long>(gens.size()) == want) break;
    if (span.contains(v)) continue;
    Polynomial<Rational> p = unflatten(v);
    std::size_t before = span.rank();
    for (const auto& b : blades) {
      auto mult = p * Multivector<Rational>::blade(m, b);
      span.insert(flatten(mult, mon_ix, blades));
    }
    if (span.rank() - before != blades.size()) {
      // candidate does not generate freely; roll back and try the next one
      span.truncate(before);
      continue;
    }
    gens.push_back(std::move(p));
  }
  if (static_cast<long long>(gens.size()) != want ||
      static_cast<long long>(null_basis.size()) != want * static_cast<long long>(blades.size()))
    throw std::runtime_error("build_monogenic_basis: null space rank does not match dimension");

  // Right-module Gram-Schmidt with the full Clifford-valued pairing, so the
  // basis satisfies <P_i, P_j> = delta_ij exactly (the scalar-part identity
  // alone would leave bivector cross terms between same-degree elements and
  // spoil module expansions downstream).
  std::vector<Polynomial<Rational>> ortho;
  std::vector<Rational> norms;
  for (auto& g : gens) {
    Polynomial<Rational> q = g;
    for (std::size_t t = 0; t < ortho.size(); ++t) {
      auto c = sphere_pairing_exact(ortho[t], g);
      if (c.is_zero()) continue;
      const Rational inv = Rational(1) / norms[t];
      q = q - ortho[t] * (c * inv);
    }
    auto self = sphere_pairing_exact(q, q);
    Rational r = self.scalar_part();
    self.set(0, Rational(0));
    if (!self.is_zero())
      throw std::runtime_error("build_monogenic_basis: non-scalar self-pairing");
    if (r <= 0) throw std::runtime_error("build_monogenic_basis: Gram-Schmidt degeneracy");
    ortho.push_back(std::move(q));
    norms.push_back(std::move(r));
  }

  for (std::size_t i = 0; i < ortho.size(); ++i) {
    const double s = 1.0 / std::sqrt(to_double(norms[i]));
    basis.elements.push_back(
        MonogenicElement{ortho[i], norms[i], s * ortho[i].cast<double>()});
  }
  return basis;
}

const MonogenicBasis& monogenic_basis(int m, int k) {
  static std::map<std::pair<int, int>, std::unique_ptr<MonogenicBasis>> cache;
  static std::shared_mutex mtx;
  const auto key = std::make_pair(m, k);
  {
    std::shared_lock lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<MonogenicBasis>(build_monogenic_basis(m, k));
  std::unique_lock lock(mtx);
  auto [it, fresh] = cache.try_emplace(key, std::move(built));
  return *it->second;
}

}  // namespace csb
