#pragma once

#include <cstddef>
#include <functional>

namespace pmp {

/// Worker count: hardware concurrency, capped by the PMP_THREADS environment
/// variable when it holds a positive integer.
std::size_t worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads with static
/// contiguous chunks. Each index must write only its own output slot, which
/// keeps results independent of the thread count. The first exception thrown
/// by any worker is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace pmp
