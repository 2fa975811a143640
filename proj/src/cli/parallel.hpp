#pragma once

#include <cstddef>
#include <functional>

namespace prabhakar::cli {

/// Runs fn(0..n-1) on up to `threads` workers (0: hardware concurrency).
/// Callers write results into per-index slots so output order never depends
/// on scheduling. The first exception thrown by any task is rethrown.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace prabhakar::cli
