#ifndef STOPLAT_PARALLEL_HPP
#define STOPLAT_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace stoplat {

/// Worker cap: STOPLAT_THREADS if set (0 = auto), else the hardware
/// concurrency, at least 1.
inline int worker_count() {
  int configured = 0;
  if (const char* env = std::getenv("STOPLAT_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && parsed >= 0 && parsed <= 1024) configured = static_cast<int>(parsed);
  }
  if (configured > 0) return configured;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(worker_index) on `workers` threads. Callers must make results
/// deterministic regardless of schedule (e.g. order-independent sums).
template <typename Fn>
void run_workers(int workers, Fn&& fn) {
  if (workers <= 1) {
    fn(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back([&fn, w] { fn(w); });
  for (auto& t : pool) t.join();
}

}  // namespace stoplat

#endif
