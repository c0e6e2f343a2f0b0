#pragma once

#include <cstddef>
#include <functional>

namespace detrep::parallel {

// Worker count for parallel loops. Resolution order: value set through
// set_max_threads, then the DETREP_THREADS environment variable (0 there
// means sequential), then the OpenMP default. Without OpenMP support
// compiled in, loops always run sequentially.
std::size_t max_threads();
// 1 forces sequential runs; 0 clears the override.
void set_max_threads(std::size_t n);

// Run fn(i) for i in [0, n). Iterations must be independent; exceptions are
// captured and the first one rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace detrep::parallel
