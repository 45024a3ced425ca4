#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace zeta_orbit {

namespace detail {

inline unsigned threads_from_environment() {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ZETA_ORBIT_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return std::min(hw, static_cast<unsigned>(v));
    } catch (const std::exception&) {
    }
  }
  return hw;
}

inline std::atomic<unsigned>& worker_setting() {
  static std::atomic<unsigned> value{threads_from_environment()};
  return value;
}

}  // namespace detail

/// Worker count for column-parallel kernels. Defaults to the hardware concurrency,
/// capped by ZETA_ORBIT_THREADS when set.
inline unsigned worker_count() { return detail::worker_setting().load(); }

inline void set_worker_count(unsigned n) { detail::worker_setting().store(std::max(1u, n)); }

/// Calls fn(i, worker) for i in [begin, end). Indices are dealt round-robin so the
/// assignment, and therefore any per-index output, is independent of timing.
template <class Fn>
void parallel_for(std::int64_t begin, std::int64_t end, Fn&& fn) {
  const std::int64_t count = end - begin;
  if (count <= 0) return;
  const unsigned workers = static_cast<unsigned>(std::min<std::int64_t>(worker_count(), count));
  if (workers <= 1) {
    for (std::int64_t i = begin; i < end; ++i) fn(i, 0u);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::int64_t i = begin + w; i < end; i += workers) fn(i, w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace zeta_orbit
