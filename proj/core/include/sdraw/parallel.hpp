#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sdraw {

/// Splits [0, count) into `jobs` contiguous chunks and runs
/// `body(begin, end, chunk)` on each, one thread per chunk. With jobs <= 1 the
/// body runs inline. The first exception thrown by any chunk is rethrown.
template <typename Body>
void parallel_chunks(std::size_t count, std::size_t jobs, Body&& body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    body(std::size_t{0}, count, std::size_t{0});
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr error;
  std::mutex mutex;
  for (std::size_t c = 0; c < jobs; ++c) {
    const std::size_t begin = count * c / jobs;
    const std::size_t end = count * (c + 1) / jobs;
    threads.emplace_back([&, begin, end, c] {
      try {
        body(begin, end, c);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace sdraw
