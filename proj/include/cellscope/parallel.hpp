#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cellscope {

/// Every data-parallel kernel takes one of these; `serial` is the reference
/// path the tests compare against.
enum class Execution { serial, parallel };

inline void set_thread_count(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

inline int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Calls f(k) for k in [0, count). Iterations must write disjoint state.
/// The first exception thrown by any iteration is rethrown on the caller.
template <class F>
void for_each_index(Execution ex, std::size_t count, F&& f) {
  if (ex == Execution::serial) {
    for (std::size_t k = 0; k < count; ++k) f(k);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t k = 0; k < total; ++k) {
    try {
      f(static_cast<std::size_t>(k));
    } catch (...) {
      const std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace cellscope
