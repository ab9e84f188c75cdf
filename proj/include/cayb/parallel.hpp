#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace cayb {

// Default worker count: CAYB_JOBS env var when set, hardware concurrency
// otherwise. Results never depend on the degree; only indexed slots are
// written from workers.
inline int default_jobs() {
  if (const char* env = std::getenv("CAYB_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Runs fn(i) for i in [0, count); fn must only touch state owned by index i.
template <class F>
void parallel_for(long count, int jobs, F&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  auto worker = [&] {
    for (;;) {
      long i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  int n_threads = static_cast<int>(std::min<long>(jobs, count));
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace cayb
