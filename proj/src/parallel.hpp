#pragma once

// Partitioned enumeration: workers pull pivot-set blocks from a shared
// counter. Each block is walked sequentially by one worker.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace flatlab::detail {

// Calls work(worker_index, block_index) for every block exactly once.
template <class Work>
void run_blocks(std::size_t block_count, unsigned threads, Work&& work) {
  const unsigned workers =
      static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(threads, block_count)));
  if (workers <= 1) {
    for (std::size_t b = 0; b < block_count; ++b) work(0U, b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t b = next++; b < block_count; b = next++) work(w, b);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = block_count;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace flatlab::detail
