#pragma once

#include <cstddef>
#include <functional>

namespace holoquant {

// Worker count: hardware concurrency capped by HOLOQUANT_THREADS.
unsigned worker_count();

// Calls fn(i) for i in [0, n). Each index is visited exactly once; fn must
// only write to state owned by its index.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace holoquant
