#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace singularhorn {

inline int effective_jobs(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(0..count-1) on up to `jobs` threads. Work items must be
/// independent; exceptions propagate from the first failing item.
inline void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  const int workers = std::min<std::size_t>(static_cast<std::size_t>(effective_jobs(jobs)), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= count) break;
          fn(i);
        }
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
        next.store(count);
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
}

}  // namespace singularhorn
