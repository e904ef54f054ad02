#pragma once

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace tourney {

/// Effective worker count: explicit request > TOURNEY_THREADS env > hardware.
inline int resolve_threads(int requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TOURNEY_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs fn(begin, end) over a static partition of [0, count) and returns the
/// per-chunk results in chunk order. Chunk boundaries depend only on `count`
/// and the worker count, and callers must merge with exact (commutative or
/// order-restoring) operations, so results are schedule-independent.
template <class R, class Fn>
std::vector<R> parallel_chunks(std::int64_t count, int threads, Fn fn) {
  threads = resolve_threads(threads);
  if (count <= 0) return {};
  int chunks = static_cast<int>(std::min<std::int64_t>(threads, count));
  std::vector<R> results(chunks);
  if (chunks == 1) {
    results[0] = fn(std::int64_t{0}, count);
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (int c = 0; c < chunks; ++c) {
    std::int64_t begin = count * c / chunks;
    std::int64_t end = count * (c + 1) / chunks;
    pool.emplace_back([&results, c, begin, end, &fn] { results[c] = fn(begin, end); });
  }
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace tourney
