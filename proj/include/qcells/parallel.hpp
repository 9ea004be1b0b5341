#pragma once

#include <cstddef>
#include <exception>

namespace qcells {

/// How a per-pattern sweep executes: single thread, or an OpenMP team.
enum class ExecMode { Serial, Parallel };

inline ExecMode default_mode() {
#ifdef _OPENMP
  return ExecMode::Parallel;
#else
  return ExecMode::Serial;
#endif
}

/// Runs fn(i) for i in [0, count). Iterations must be independent; results
/// should be written to distinct slots. The first exception thrown by any
/// iteration is rethrown on the calling thread.
template <typename F>
void for_each_index(std::size_t count, ExecMode mode, F&& fn) {
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) {
    std::exception_ptr err;
    const long long limit = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < limit; ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(qcells_for_each_index_err)
        {
          if (!err) err = std::current_exception();
        }
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace qcells
