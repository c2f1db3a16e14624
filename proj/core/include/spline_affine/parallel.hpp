#pragma once

#include <cstddef>
#include <functional>

namespace spline_affine {

/// Worker count: SPLINE_AFFINE_THREADS when set to a positive integer,
/// otherwise the number of hardware threads.
unsigned worker_count();

/// Runs body(i) for i in [0, count). Indices are handed out dynamically;
/// body must only touch state owned by index i. The first exception thrown
/// by any worker is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace spline_affine
