#pragma once

#include <functional>

namespace gwalk {

/// Worker cap for internally parallel kernels: hardware concurrency, clamped by
/// the GROVER_LAB_THREADS environment variable when set. Always >= 1.
int thread_cap();

/// Runs f(i) for i in [0, n) over at most thread_cap() workers, chunked by
/// contiguous ranges. Results must be written to disjoint slots so the outcome
/// is identical to the serial order.
void parallel_for(int n, const std::function<void(int)>& f);

} // namespace gwalk
