#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace sasakilink {

// Evaluates f(0), ..., f(count - 1) on up to `workers` threads and returns the
// results in index order. Workers pull indices from a shared counter and share
// nothing else; f must not throw. When `stop` becomes true, remaining indices
// are left default-constructed.
template <class R, class F>
std::vector<R> parallel_map(std::size_t count, unsigned workers, F f, const std::atomic<bool>* stop = nullptr) {
  std::vector<R> out(count);
  auto stopped = [&] { return stop && stop->load(std::memory_order_relaxed); };
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count && !stopped(); ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count || stopped()) return;
      out[i] = f(i);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers && w < count; ++w) pool.emplace_back(run);
  }
  return out;
}

}  // namespace sasakilink
