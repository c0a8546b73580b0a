#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace lcinterp {

/// Number of worker threads used by the parallel loops (default 1).
void set_thread_count(int n);
int thread_count();

/// Calls body(i) for i in [0, count). Iterations may run concurrently; the
/// caller must write results into per-index slots so the outcome does not
/// depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// Pairwise summation in a fixed tree order.
double pairwise_sum(std::span<const double> values);

}  // namespace lcinterp
