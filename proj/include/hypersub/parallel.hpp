#pragma once

#include <cstddef>
#include <functional>

namespace hypersub {

/// Worker count used by the parallel kernels. Defaults to the hardware
/// concurrency; results never depend on it.
void set_num_threads(unsigned n);
unsigned num_threads();

/// Calls body(begin, end) over a static partition of [0, n).
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace hypersub
