#pragma once

#include <cstdint>
#include <functional>

namespace mdf {

// Worker cap for internal parallel loops. Resolution order:
//   MDFKIT_THREADS env var (0 or unset = auto) -> hardware_concurrency.
int max_threads();

// Runs fn(begin, end) over [0, n) split into contiguous chunks, one chunk
// per worker. Chunks are disjoint, so loops whose iterations write disjoint
// outputs produce results bit-identical to a sequential sweep.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace mdf
