#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace rtk {

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. fn must only
/// write to per-index state. The first exception (lowest index) is rethrown.
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  jobs = std::max(1U, jobs);
  if (jobs == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::size_t err_index = count;
  std::exception_ptr err;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (i < err_index) {
          err_index = i;
          err = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

/// Smallest i in [0, count) with pred(i) true, evaluated in blocks so that
/// the answer does not depend on `jobs`.
template <typename Pred>
std::optional<std::size_t> parallel_find_first(std::size_t count, unsigned jobs, Pred&& pred) {
  jobs = std::max(1U, jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  const std::size_t block = std::size_t{16} * jobs;
  for (std::size_t start = 0; start < count; start += block) {
    const std::size_t len = std::min(block, count - start);
    std::vector<char> hit(len, 0);
    parallel_for(len, jobs, [&](std::size_t k) { hit[k] = pred(start + k) ? 1 : 0; });
    for (std::size_t k = 0; k < len; ++k) {
      if (hit[k]) return start + k;
    }
  }
  return std::nullopt;
}

}  // namespace rtk
