#pragma once

#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qrea {

enum class Exec { Serial, Parallel };

/// Evaluates f(0..n-1) into a vector in index order. The parallel path uses
/// OpenMP with dynamic scheduling; results are identical to the serial path
/// because every slot is written by exactly one iteration. The first exception
/// (by index) is rethrown after the loop.
template <class T, class F>
std::vector<T> sweep(std::size_t n, F f, Exec exec = Exec::Parallel) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qrea
