#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace catswarm {

/// Number of worker threads `threads` resolves to (0 = all available).
inline int resolve_threads(int threads) noexcept {
#ifdef _OPENMP
  return threads > 0 ? threads : omp_get_max_threads();
#else
  (void)threads;
  return 1;
#endif
}

/// Runs body(i) for i in [0, n). threads == 1 is the serial reference path;
/// otherwise iterations are spread over OpenMP threads. Iterations must be
/// independent. The first exception thrown by any iteration is rethrown.
template <class Body>
void parallel_for(std::size_t n, int threads, Body&& body) {
  const int workers = resolve_threads(threads);
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace catswarm
