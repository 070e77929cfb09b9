#pragma once

#include <cstddef>
#include <functional>

namespace turaev {

/// Runs fn(i) for i in [0, count) on `jobs` worker threads (jobs <= 0 means
/// hardware concurrency). Work items are claimed through an atomic counter;
/// the first exception thrown by any worker is rethrown on the caller.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

/// $TURAEV_JOBS when set to a positive integer, else 1.
int default_jobs();

}  // namespace turaev
