#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tracefield {

// hardware_concurrency, capped by TRACE_PRODUCTS_THREADS when set.
inline unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TRACE_PRODUCTS_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
  }
  return hw;
}

// Runs body(i) for i in [begin, end) over contiguous blocks. Callers write
// into per-index slots so the merged result does not depend on scheduling.
template <class Body>
void parallel_for(std::uint64_t begin, std::uint64_t end, Body&& body) {
  if (end <= begin) return;
  std::uint64_t total = end - begin;
  unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), total));
  if (workers <= 1) {
    for (std::uint64_t i = begin; i < end; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  std::uint64_t block = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t lo = begin + w * block, hi = std::min(end, lo + block);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      try {
        for (std::uint64_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace tracefield
