// Thread cap and deterministic reductions shared by the heavier loops.
//
// ORLICZLAB_THREADS caps internal parallelism (default: hardware concurrency).
// Reductions always use a fixed pairwise order so results do not depend on
// the number of workers.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace orliczlab {

inline int thread_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("ORLICZLAB_THREADS")) {
      const int v = std::atoi(env);
      if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
  }();
  return cap;
}

/// Run fn(i) for i in [0, n). Order of side effects per index is arbitrary,
/// so fn must write only to its own slot of any shared output.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const int workers = std::min<std::size_t>(thread_cap(), n);
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

/// Pairwise (cascade) summation; deterministic for a fixed input order.
inline double pairwise_sum(std::vector<double>& buf) {
  std::size_t n = buf.size();
  if (n == 0) return 0.0;
  while (n > 1) {
    const std::size_t half = n / 2;
    for (std::size_t i = 0; i < half; ++i) buf[i] = buf[2 * i] + buf[2 * i + 1];
    if (n % 2 == 1) {
      buf[half] = buf[n - 1];
      n = half + 1;
    } else {
      n = half;
    }
  }
  return buf[0];
}

}  // namespace orliczlab
