#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace omega {

/// Runs work(i) for every i in [0, units) on up to `threads` workers and
/// folds the per-unit results in index order, so the outcome does not depend
/// on scheduling. Acc is arithmetic, or default-constructible with merge().
template <class Acc, class Work>
Acc ordered_reduce(std::size_t units, unsigned threads, Work&& work) {
  std::vector<Acc> partial(units);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(units, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < units; ++i) partial[i] = work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        try {
          for (std::size_t i = next++; i < units; i = next++) partial[i] = work(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = units;
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  Acc total{};
  for (const auto& p : partial) {
    if constexpr (std::is_arithmetic_v<Acc>) {
      total += p;
    } else {
      total.merge(p);
    }
  }
  return total;
}

}  // namespace omega
