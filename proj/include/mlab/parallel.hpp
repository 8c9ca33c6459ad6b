#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace mlab {

/// Worker cap: hardware concurrency clipped by MODULI_LAB_THREADS.
inline int thread_cap() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("MODULI_LAB_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) hw = std::min(hw, cap);
  }
  return hw;
}

/// Runs f(i) for i in [0, n). Work is split into fixed-size chunks handed to
/// whichever thread is free, so any reduction keyed by index i is independent
/// of the number of threads. Single-threaded when the cap is 1.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  int workers = thread_cap();
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  const std::size_t chunk = std::max<std::size_t>(1, n / (4 * workers));
  auto body = [&] {
    for (;;) {
      std::size_t begin = next.fetch_add(chunk);
      if (begin >= n) return;
      std::size_t end = std::min(n, begin + chunk);
      for (std::size_t i = begin; i < end; ++i) f(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int t = 1; t < workers; ++t) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
}

/// Deterministic parallel max: results land in a per-index slot, reduced
/// sequentially afterwards.
template <class F>
double parallel_max(std::size_t n, F&& f) {
  std::vector<double> vals(n, 0.0);
  parallel_for(n, [&](std::size_t i) { vals[i] = f(i); });
  double m = 0.0;
  for (double v : vals) m = std::max(m, v);
  return m;
}

}  // namespace mlab
