#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace csb {

/// Execution policy for the data-parallel kernels. Both paths use the same
/// fixed block structure, so results are bitwise identical; `serial` is the
/// reference implementation the tests compare against.
enum class Exec { serial, parallel };

inline constexpr std::size_t kReduceBlock = 4096;

/// Blocked sum of term contributions for i = 0 ... count-1. Each block is
/// accumulated in ascending index order and the block partials are folded in
/// ascending block order, independent of the thread count.
///
/// term(i, acc) adds contribution i into acc; Acc needs operator+= and a
/// copyable zero element.
template <class Acc, class TermFn>
Acc blocked_sum(std::size_t count, const Acc& zero, TermFn&& term, Exec exec = Exec::parallel) {
  const std::size_t nblocks = count == 0 ? 0 : (count - 1) / kReduceBlock + 1;
  std::vector<Acc> partial(nblocks, zero);

  auto run_block = [&](std::size_t b) {
    const std::size_t lo = b * kReduceBlock;
    const std::size_t hi = std::min(lo + kReduceBlock, count);
    Acc acc = zero;
    for (std::size_t i = lo; i < hi; ++i) term(i, acc);
    partial[b] = acc;
  };

#ifdef _OPENMP
  if (exec == Exec::parallel && nblocks > 1) {
#pragma omp parallel for schedule(static)
    for (long long b = 0; b < static_cast<long long>(nblocks); ++b)
      run_block(static_cast<std::size_t>(b));
  } else
#endif
  {
    (void)exec;
    for (std::size_t b = 0; b < nblocks; ++b) run_block(b);
  }

  Acc total = zero;
  for (std::size_t b = 0; b < nblocks; ++b) total += partial[b];
  return total;
}

/// Independent-slot fan-out: body(i) writes only state owned by index i.
template <class BodyFn>
void parallel_for(std::size_t count, BodyFn&& body, Exec exec = Exec::parallel) {
#ifdef _OPENMP
  if (exec == Exec::parallel && count > 1) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      body(static_cast<std::size_t>(i));
    return;
  }
#endif
  (void)exec;
  for (std::size_t i = 0; i < count; ++i) body(i);
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace csb
