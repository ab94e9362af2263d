#ifndef GRIDNET_PARALLEL_HPP
#define GRIDNET_PARALLEL_HPP

#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gridnet {

/// Resolves a worker-count request: 0 means "use the hardware".
inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

/// Splits [0, n) into contiguous chunks and runs fn(begin, end, worker_id)
/// on each, one chunk per worker. Callers must only write to disjoint,
/// index-addressed slots so the result is identical for any worker count.
/// The first exception thrown by a worker is rethrown after all join.
template <typename Fn>
void parallel_chunks(std::int64_t n, int workers, Fn&& fn) {
  workers = resolve_workers(workers);
  if (n <= 0) return;
  if (workers > n) workers = static_cast<int>(n);
  if (workers == 1) {
    fn(std::int64_t{0}, n, 0);
    return;
  }

  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::exception_ptr first_error;
  std::mutex error_mutex;

  const std::int64_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t begin = w * chunk;
    const std::int64_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&, begin, end, w] {
      try {
        fn(begin, end, w);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace gridnet

#endif
