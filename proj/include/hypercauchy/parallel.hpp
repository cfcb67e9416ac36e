#pragma once

#include <cstddef>
#include <functional>

namespace hypercauchy {

/// Worker count: HYPERCAUCHY_THREADS if set, else hardware concurrency.
unsigned worker_count();

/// Runs body(begin, end) over contiguous chunks of [0, count). Chunk
/// boundaries depend only on count, so callers that write per-index
/// results get identical output for any thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace hypercauchy
