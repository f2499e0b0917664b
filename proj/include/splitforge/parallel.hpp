#pragma once
// Minimal thread fan-out. Results never depend on the thread count: callers
// either merge per-index results in index order or keep the least index that
// produced a hit.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace splitforge {

// 0 means "not set": fall back to SPLITFORGE_THREADS, then to 1.
void set_default_threads(unsigned threads);
unsigned default_threads();

inline unsigned resolve_threads(unsigned requested) {
  return requested != 0 ? requested : default_threads();
}

// Calls fn(i) for every i in [0, n); indices are handed out dynamically.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  threads = std::max(1u, resolve_threads(threads));
  if (threads == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) fn(i);
  };
  std::vector<std::thread> pool;
  const unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(threads, n)) - 1;
  for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

// Returns fn(i) for the least i in [0, n) where fn(i) is engaged. Indices
// above the best hit so far are skipped, so fn must be a pure function of i.
template <class T, class Fn>
std::optional<T> first_hit(std::size_t n, unsigned threads, Fn&& fn) {
  std::atomic<std::size_t> best{n};
  std::optional<T> result;
  std::mutex lock;
  parallel_for(n, threads, [&](std::size_t i) {
    if (i >= best.load(std::memory_order_relaxed)) return;
    std::optional<T> hit = fn(i);
    if (!hit) return;
    std::lock_guard<std::mutex> guard(lock);
    if (i < best.load()) {
      best.store(i);
      result = std::move(hit);
    }
  });
  return result;
}

}  // namespace splitforge
