#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace nsfn::detail {

inline unsigned resolve_jobs(int jobs) {
  if (jobs > 0) {
    return static_cast<unsigned>(jobs);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [lo, hi] into at most `jobs` contiguous chunks and runs
// body(chunk_lo, chunk_hi) on worker threads. Callers write results into
// per-index slots, so merged output never depends on the worker count.
// The first exception thrown by any chunk is rethrown on the calling thread.
inline void chunked_for(std::uint64_t lo, std::uint64_t hi, int jobs,
                        const std::function<void(std::uint64_t, std::uint64_t)>& body) {
  if (lo > hi) {
    return;
  }
  const std::uint64_t count = hi - lo + 1;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_jobs(jobs), count));
  if (workers <= 1) {
    body(lo, hi);
    return;
  }

  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t chunk_lo = lo + count * w / workers;
    const std::uint64_t chunk_hi = lo + count * (w + 1) / workers - 1;
    threads.emplace_back([&, chunk_lo, chunk_hi] {
      try {
        body(chunk_lo, chunk_hi);
      } catch (...) {
        const std::lock_guard<std::mutex> guard(error_mutex);
        if (!first_error) {
          first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : threads) {
    t.join();
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }
}

}  // namespace nsfn::detail
