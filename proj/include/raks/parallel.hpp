#pragma once

// OpenMP region plumbing shared by the parallel kernels.

#include <algorithm>
#include <thread>
#include <type_traits>

#if defined(__SANITIZE_THREAD__)
#include <mutex>

#include <sanitizer/tsan_interface.h>
#endif

namespace raks::parallel {

#if defined(__SANITIZE_THREAD__)
namespace detail {
inline std::mutex region_mutex;
inline void (*region_invoke)(void*) = nullptr;
inline void* region_body = nullptr;
inline char region_fork = 0;
inline char region_join = 0;
}  // namespace detail
#endif

// Runs body() once on every thread of a team of `threads` (at least one).
// The body may hold orphaned `omp for` loops. Regions must not nest.
template <typename Body>
void region(int threads, Body&& body) {
  const int team = std::max(1, threads);
#if defined(__SANITIZE_THREAD__)
  // libgomp is not built with ThreadSanitizer, so TSan cannot see the fork and
  // join of a region, nor the block of shared-variable pointers the compiler
  // writes on the master's stack just before forking. Here the region touches
  // no locals at all: the body travels through globals written before a
  // published release, and the join is published by hand as well.
  using Fn = std::remove_reference_t<Body>;
  std::lock_guard lock(detail::region_mutex);
  detail::region_invoke = [](void* p) { (*static_cast<Fn*>(p))(); };
  detail::region_body = const_cast<void*>(static_cast<const void*>(&body));
  __tsan_release(&detail::region_fork);
#pragma omp parallel num_threads(team)
  {
    __tsan_acquire(&detail::region_fork);
    detail::region_invoke(detail::region_body);
    __tsan_release(&detail::region_join);
  }
  __tsan_acquire(&detail::region_join);
#else
#pragma omp parallel num_threads(team)
  body();
#endif
}

inline int hardware_threads() {
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

}  // namespace raks::parallel
