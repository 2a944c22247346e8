#pragma once

#include <cstddef>
#include <functional>

namespace bpl {

// Number of workers parallel_for will use: the BPL_WORKERS environment
// variable if set (clamped to [1, 256]), otherwise hardware concurrency.
// Read fresh on every call so tests can change it at runtime.
std::size_t worker_count();

// Run fn(i) for i in [0, count). Work is split into contiguous chunks, one
// per worker. fn must only write to locations indexed by i so that results
// are identical for every worker count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace bpl
