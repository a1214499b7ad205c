#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bergman {

// Data-parallel index loop for experiment sweeps. Each index writes only its
// own output slot, so the parallel and serial paths produce bit-identical
// results; the serial path is the reference the tests compare against.
template <class F>
void parallelFor(std::size_t n, F&& f, bool parallel = true) {
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      f(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < n; ++i) f(i);
}

inline int threadCount() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace bergman
