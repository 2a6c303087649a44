#pragma once

#include <cstddef>
#include <functional>

namespace wpvol {

// Runs fn(0..count-1) on up to `workers` threads. The first exception thrown
// by a task stops the hand-out of new indices and is rethrown to the caller.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn);

}  // namespace wpvol
