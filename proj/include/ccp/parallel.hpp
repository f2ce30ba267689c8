#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ccp {

// Execution policy for the data-parallel kernels (split search, batch
// scoring, batch p-values, Monte Carlo trials). The serial path is the
// reference; the parallel path must produce identical results.
enum class ExecPolicy { kSerial, kParallel };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Index loop over [0, n). Bodies must write disjoint state so the result is
// independent of scheduling.
template <typename Fn>
void for_each_index(std::size_t n, ExecPolicy exec, Fn&& fn) {
#ifdef _OPENMP
  if (exec == ExecPolicy::kParallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
      fn(static_cast<std::size_t>(i));
    }
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace ccp
