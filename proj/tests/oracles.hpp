#pragma once

// Independent oracles used to freeze expected values. These deliberately
// avoid the library's own code paths: blade products are expanded as
// generator strings, derivatives are taken by finite differences.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "csb/multivector.hpp"
#include "csb/polynomial.hpp"

namespace oracle {

/// e_A e_B by brute force: concatenate the generator strings, bubble-sort
/// with a sign flip per transposition, cancel equal neighbours with e_j^2=-1.
inline std::pair<int, csb::BladeIndex> blade_product_bruteforce(csb::BladeIndex a,
                                                                csb::BladeIndex b) {
  std::vector<int> gens;
  for (int j = 0; j < csb::kMaxDim; ++j)
    if (a & (1u << j)) gens.push_back(j);
  for (int j = 0; j < csb::kMaxDim; ++j)
    if (b & (1u << j)) gens.push_back(j);

  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
      if (gens[i] > gens[i + 1]) {
        std::swap(gens[i], gens[i + 1]);
        sign = -sign;
        moved = true;
      } else if (gens[i] == gens[i + 1]) {
        gens.erase(gens.begin() + static_cast<long>(i), gens.begin() + static_cast<long>(i) + 2);
        sign = -sign;  // e_j^2 = -1
        moved = true;
        break;
      }
    }
  }
  csb::BladeIndex mask = 0;
  for (int g : gens) mask |= 1u << g;
  return {sign, mask};
}

/// Portable deterministic uniform draws on [-1, 1].
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    // splitmix64
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }  // [0,1)
  double pm1() { return 2.0 * unit() - 1.0; }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

 private:
  std::uint64_t s_;
};

inline csb::MvD random_mv(Rng& rng, int m) {
  csb::MvD a(m);
  for (std::size_t i = 0; i < a.size(); ++i)
    a.set(static_cast<csb::BladeIndex>(i), rng.pm1());
  return a;
}

inline csb::MvC random_mvc(Rng& rng, int m) {
  csb::MvC a(m);
  for (std::size_t i = 0; i < a.size(); ++i)
    a.set(static_cast<csb::BladeIndex>(i), {rng.pm1(), rng.pm1()});
  return a;
}

/// Sparse rational multivector with small entries (exact-mode property runs).
inline csb::MvQ random_mvq(Rng& rng, int m, int max_terms = 6) {
  csb::MvQ a(m);
  const int nt = 1 + rng.below(max_terms);
  for (int t = 0; t < nt; ++t) {
    const auto blade = static_cast<csb::BladeIndex>(rng.below(1 << m));
    const int num = rng.below(19) - 9;
    const int den = 1 + rng.below(7);
    a.set(blade, a[blade] + csb::Rational(num, den));
  }
  return a;
}

inline csb::MvCQ random_mvcq(Rng& rng, int m, int max_terms = 6) {
  csb::MvCQ a(m);
  const int nt = 1 + rng.below(max_terms);
  for (int t = 0; t < nt; ++t) {
    const auto blade = static_cast<csb::BladeIndex>(rng.below(1 << m));
    csb::CRational v(csb::Rational(rng.below(19) - 9, 1 + rng.below(7)),
                     csb::Rational(rng.below(19) - 9, 1 + rng.below(7)));
    a.set(blade, a[blade] + v);
  }
  return a;
}

inline csb::PolyQ random_polyq(Rng& rng, int m, int max_degree, int terms) {
  csb::PolyQ p(m);
  for (int t = 0; t < terms; ++t) {
    csb::MultiIndex a(m);
    for (int j = 0; j < m; ++j) a.e[j] = rng.below(max_degree + 1);
    if (a.degree() > max_degree) continue;
    p.add_term(a, random_mvq(rng, m, 3));
  }
  return p;
}

/// Central finite difference of a Clifford-valued function along one axis.
template <class F>
csb::MvD fd_partial(F&& f, std::vector<double> x, int axis, double h = 1e-5) {
  x[axis] += h;
  csb::MvD hi = f(x);
  x[axis] -= 2 * h;
  csb::MvD lo = f(x);
  return (hi - lo) * (1.0 / (2.0 * h));
}

}  // namespace oracle
