// Timing comparison between the serial reference kernels and the OpenMP
// paths on representative grid integrals. Not a correctness test; the unit
// suites assert bitwise agreement of the two paths.

#include <chrono>
#include <cstdio>
#include <vector>

#include "csb/bargmann.hpp"

using namespace csb;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <class F>
double time_best_of(int reps, F&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    fn();
    best = std::min(best, ms_since(t0));
  }
  return best;
}

void print_row(const char* what, double ts, double tp) {
  std::printf("%s\n  serial   %9.2f ms\n  openmp   %9.2f ms\n  speedup  %9.2fx\n\n", what, ts,
              tp, ts / tp);
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", max_threads());

  // Workload 1: Fock-module inner product on the 2m-axis tensor grid. The
  // expanded real-coordinate integrand carries thousands of terms, so the
  // node loop is the hot path.
  {
    const int m = 3;
    const auto& fa = transform_exact(m, BasisIndex{3, 1, 1});
    const auto& fb = transform_exact(m, BasisIndex{3, 1, 2});
    volatile double sink = 0.0;
    const double ts =
        time_best_of(3, [&] { sink = norm0(fock_inner_quadrature(fa, fb, Exec::serial)); });
    const double tp =
        time_best_of(3, [&] { sink = norm0(fock_inner_quadrature(fa, fb, Exec::parallel)); });
    (void)sink;
    print_row("fock_inner_quadrature m=3 (l,k)=(3,1), 6-axis tensor grid", ts, tp);
  }

  // Workload 2: dictionary coefficient fan-out (independent quadratures per
  // basis index).
  {
    const int m = 3;
    const auto& f = phi(m, BasisIndex{4, 2, 3});
    volatile double sink = 0.0;
    const double ts =
        time_best_of(3, [&] { sink = expand(m, f.poly, 4, 3, Exec::serial).norm_f; });
    const double tp =
        time_best_of(3, [&] { sink = expand(m, f.poly, 4, 3, Exec::parallel).norm_f; });
    (void)sink;
    print_row("expand m=3 caps (4,3), 50 coefficient integrals", ts, tp);
  }

  // Workload 3: Gram matrix fan-out over basis pairs.
  {
    const int m = 3;
    volatile double sink = 0.0;
    const double ts = time_best_of(3, [&] { sink = gram_matrix(m, 3, 2, Exec::serial)[0][0]; });
    const double tp = time_best_of(3, [&] { sink = gram_matrix(m, 3, 2, Exec::parallel)[0][0]; });
    (void)sink;
    print_row("gram_matrix m=3 lmax=3 kmax=2, 300 pair integrals", ts, tp);
  }

  // Reference point: a single transform evaluation stays under one reduction
  // block (4096 nodes), so it intentionally runs serial either way.
  {
    const int m = 3;
    const auto& f = phi(m, BasisIndex{6, 2, 3});
    std::vector<Cx> z{{0.3, 0.1}, {-0.2, 0.4}, {0.5, -0.3}};
    volatile double sink = 0.0;
    auto run = [&](Exec exec) {
      double acc = 0.0;
      for (int rep = 0; rep < 2000; ++rep) acc += norm0(transform_numeric(f.poly, z, exec));
      return acc;
    };
    const double ts = time_best_of(3, [&] { sink = run(Exec::serial); });
    const double tp = time_best_of(3, [&] { sink = run(Exec::parallel); });
    (void)sink;
    print_row("transform_numeric m=3, 2000 sub-block evaluations (expected ~1x)", ts, tp);
  }
  return 0;
}
