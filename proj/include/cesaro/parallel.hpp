#pragma once

#include <cstddef>
#include <functional>

namespace cesaro {

/// Worker count: CESARO_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned worker_count();

/// Calls body(i) for i in [0, n) across worker_count() threads.  Each index
/// runs exactly once; callers write results into per-index slots so the
/// outcome does not depend on scheduling.  The first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cesaro
