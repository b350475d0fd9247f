#pragma once

#include <cstddef>
#include <functional>

namespace qeccf {

// QECCF_THREADS if set to a positive integer, otherwise hardware concurrency.
int default_threads();

// Runs fn(i) for i in [0, n) on up to `threads` workers. Work is handed out in
// index order; results must be written to per-index slots by the caller.
// The first exception thrown by any worker is rethrown after all join.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace qeccf
