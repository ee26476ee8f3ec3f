#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace csb {

/// Deterministic, platform-independent draw sequence (splitmix64). All
/// report sampling goes through this so identical (argv, seed) runs are
/// byte-identical everywhere.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }  // [0, 1)
  double pm1() { return 2.0 * unit() - 1.0; }                              // [-1, 1)
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  std::vector<double> point_pm1(int d) {
    std::vector<double> x(static_cast<std::size_t>(d));
    for (auto& v : x) v = pm1();
    return x;
  }

  /// Complex point with coordinates drawn from [-1,1]^2 scaled by `scale`.
  std::vector<std::complex<double>> complex_point(int m, double scale) {
    std::vector<std::complex<double>> z(static_cast<std::size_t>(m));
    for (auto& v : z) v = std::complex<double>(scale * pm1(), scale * pm1());
    return z;
  }

 private:
  std::uint64_t state_;
};

}  // namespace csb
