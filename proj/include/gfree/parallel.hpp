#pragma once

// Execution policy for the data-parallel kernels. Every kernel that accepts an
// Exec has a serial path that is the reference implementation; the parallel
// path must produce identical results (outputs are written by index and
// merged in index order).

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gfree {

enum class Exec { Serial, Parallel };

/// Number of OpenMP threads used by Exec::Parallel (1 without OpenMP).
int max_threads();
void set_threads(int n);

/// Runs body(i) for i in [0, n). Exceptions thrown inside the parallel
/// region are captured and the first one is rethrown afterwards.
template <class Body>
void for_each_index(Exec exec, std::size_t n, Body&& body) {
  if (exec == Exec::Serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr first;
  std::mutex mu;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!first) first = std::current_exception();
    }
  }
  if (first) std::rethrow_exception(first);
}

}  // namespace gfree
