#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace ym {

// Splits [0,total) into fixed-size blocks and runs fn(block_index, begin, end)
// over them with up to n_threads workers. Block geometry does not depend on
// the thread count, so per-block results can be reduced in block order to get
// output that is independent of n_threads.
inline void parallel_blocks(size_t total, size_t block_size, unsigned n_threads,
                            const std::function<void(size_t, size_t, size_t)>& fn) {
  if (block_size == 0) block_size = 1;
  const size_t n_blocks = (total + block_size - 1) / block_size;
  if (n_threads == 0) n_threads = 1;
  if (n_threads == 1 || n_blocks <= 1) {
    for (size_t b = 0; b < n_blocks; ++b)
      fn(b, b * block_size, std::min(total, (b + 1) * block_size));
    return;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t b = next.fetch_add(1);
      if (b >= n_blocks) return;
      fn(b, b * block_size, std::min(total, (b + 1) * block_size));
    }
  };
  std::vector<std::thread> pool;
  unsigned k = std::min<size_t>(n_threads, n_blocks);
  pool.reserve(k);
  for (unsigned i = 0; i < k; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace ym
