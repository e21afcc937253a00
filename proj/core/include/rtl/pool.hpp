#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace rtl {

/// Runs fn(chunk_index, begin, end) over [0, n) split into contiguous chunks,
/// one per worker. Chunk boundaries depend only on (n, workers), so callers
/// that merge per-chunk results in chunk order stay deterministic.
inline void parallel_chunks(std::size_t n, int workers,
                            const std::function<void(int, std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  int w = std::max(1, workers);
  std::size_t chunks = std::min<std::size_t>(w, n);
  if (chunks == 1) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  std::size_t per = n / chunks, extra = n % chunks, begin = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t len = per + (c < extra ? 1 : 0);
    std::size_t b = begin, e = begin + len;
    begin = e;
    threads.emplace_back([&fn, c, b, e] { fn(static_cast<int>(c), b, e); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace rtl
