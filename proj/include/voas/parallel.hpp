#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace voas {

/// Worker count from VOAS_WORKERS; defaults to the hardware concurrency.
inline unsigned worker_count() {
  if (const char* s = std::getenv("VOAS_WORKERS")) {
    try {
      long n = std::stol(s);
      if (n >= 1) return static_cast<unsigned>(std::min(n, 256L));
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// fn(i) for i in [0, n).  Work is handed out by an atomic counter; the caller
/// owns any reduction, so results are independent of scheduling.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn, std::size_t min_parallel = 16) {
  unsigned w = worker_count();
  if (w <= 1 || n < min_parallel) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  w = static_cast<unsigned>(std::min<std::size_t>(w, n));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(w);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < w; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next++; i < n; i = next++) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
        next = n;
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace voas
