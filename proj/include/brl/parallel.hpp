#pragma once

// Deterministic worker pool: parallel_for shards [0, n) across a fixed number
// of workers. Results must be written to caller-owned, index-addressed slots,
// which keeps every output independent of scheduling.

#include <cstddef>
#include <functional>

namespace brl {

void parallel_for(int jobs, std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace brl
