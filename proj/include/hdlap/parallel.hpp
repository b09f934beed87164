#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace hdlap {

/// Runs fn(chunk_index, begin, count) over [0, total) split into fixed-size
/// chunks. Chunks are handed to workers dynamically, so callers must write
/// results only into chunk-indexed storage; merging by chunk index then
/// gives the same result for any thread count.
inline void for_each_chunk(std::int64_t total, std::int64_t chunk_size, int threads,
                           const std::function<void(std::int64_t, std::int64_t, std::int64_t)>& fn) {
  if (total <= 0) return;
  const std::int64_t n_chunks = (total + chunk_size - 1) / chunk_size;
  auto run_chunk = [&](std::int64_t c) {
    const std::int64_t begin = c * chunk_size;
    fn(c, begin, std::min(chunk_size, total - begin));
  };
  if (threads <= 1 || n_chunks == 1) {
    for (std::int64_t c = 0; c < n_chunks; ++c) run_chunk(c);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  const int n_workers = static_cast<int>(std::min<std::int64_t>(threads, n_chunks));
  pool.reserve(static_cast<std::size_t>(n_workers));
  for (int t = 0; t < n_workers; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::int64_t c = next.fetch_add(1);
        if (c >= n_chunks) return;
        run_chunk(c);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace hdlap
