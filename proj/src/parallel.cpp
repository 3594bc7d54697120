#include "ghcode/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace ghcode {

namespace {

unsigned default_workers() {
  if (const char* env = std::getenv("GHCODE_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::atomic<unsigned>& workers() {
  static std::atomic<unsigned> value{default_workers()};
  return value;
}

}  // namespace

unsigned worker_count() { return workers().load(); }

void set_worker_count(unsigned n) { workers().store(std::max(1u, n)); }

void parallel_ranges(std::uint64_t n, const std::function<void(std::uint64_t, std::uint64_t)>& fn) {
  const std::uint64_t parts = std::min<std::uint64_t>(worker_count(), n);
  if (parts <= 1) {
    if (n > 0) fn(0, n);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> threads;
  threads.reserve(parts);
  for (std::uint64_t k = 0; k < parts; ++k) {
    const std::uint64_t begin = n * k / parts;
    const std::uint64_t end = n * (k + 1) / parts;
    threads.emplace_back([&, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  threads.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace ghcode
