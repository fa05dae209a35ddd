#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace bol {

inline int effective_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BOL_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Work-stealing index loop; tasks must not depend on execution order.
inline void parallel_for(long n, int threads, const std::function<void(long)>& fn) {
  if (n <= 0) return;
  threads = static_cast<int>(std::min<long>(threads, n));
  if (threads <= 1) {
    for (long q = 0; q < n; ++q) fn(q);
    return;
  }
  std::atomic<long> next{0};
  std::exception_ptr eptr = nullptr;
  std::mutex emu;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        long q = next.fetch_add(1);
        if (q >= n) return;
        try {
          fn(q);
        } catch (...) {
          std::lock_guard<std::mutex> lk(emu);
          if (!eptr) eptr = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (eptr) std::rethrow_exception(eptr);
}

}  // namespace bol
