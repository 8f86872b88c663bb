#pragma once

#include <cstddef>
#include <functional>

namespace cenbm {

/// Worker cap: CENTROID_BM_THREADS if set to a positive integer, otherwise
/// the machine's hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Iterations
/// are handed out in contiguous blocks; callers write into per-index slots
/// and reduce afterwards so results do not depend on scheduling. The first
/// exception thrown by any iteration is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cenbm
