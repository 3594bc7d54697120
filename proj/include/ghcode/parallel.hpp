#pragma once

#include <cstdint>
#include <functional>

namespace ghcode {

/// Worker threads used by library loops. Defaults to GHCODE_THREADS when set,
/// otherwise the hardware concurrency.
unsigned worker_count();
void set_worker_count(unsigned workers);

/// Splits [0, n) into contiguous ranges, one per worker, and runs fn(begin, end) on each.
/// The first exception thrown by any worker is rethrown after all workers join.
void parallel_ranges(std::uint64_t n, const std::function<void(std::uint64_t, std::uint64_t)>& fn);

}  // namespace ghcode
