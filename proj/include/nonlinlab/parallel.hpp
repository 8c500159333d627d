#ifndef NONLINLAB_PARALLEL_HPP
#define NONLINLAB_PARALLEL_HPP

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace nonlinlab {

/// Runs body(i) for i in [0, n) across `threads` workers. Work items must
/// not share mutable state; results should be written to per-index slots so
/// the outcome is independent of scheduling.
inline void parallel_for(int n, int threads, const std::function<void(int)>& body) {
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n) return;
      body(i);
    }
  };
  std::vector<std::thread> pool;
  const int count = std::min(threads, n);
  pool.reserve(count);
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace nonlinlab

#endif
