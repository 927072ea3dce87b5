#pragma once
// Deterministic fan-out: run fn(i) for i in [0, count) on up to `threads`
// workers. Callers write results into preallocated per-index slots, so the
// merged output never depends on scheduling. fn must not throw.

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace census {

inline int resolve_threads() {
  if (const char* env = std::getenv("CYCLIC_CENSUS_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? (int)hc : 1;
}

template <typename F>
void parallel_for(size_t count, int threads, F&& fn) {
  if (threads <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  size_t nworkers = std::min((size_t)threads, count);
  std::vector<std::thread> pool;
  pool.reserve(nworkers);
  for (size_t t = 0; t < nworkers; ++t)
    pool.emplace_back([&] {
      for (size_t i; (i = next.fetch_add(1)) < count;) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace census
