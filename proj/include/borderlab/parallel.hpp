#pragma once

#include <cstddef>
#include <functional>

namespace borderlab {

// Worker count for internal parallelism: hardware concurrency, capped by the
// BORDERLAB_THREADS environment variable.
std::size_t workerCount();

// Runs fn(i) for i in [0, count).  Work items must be independent; results
// are deterministic because each item writes only its own slot.  Runs inline
// when a single worker suffices.  workers = 0 means "use workerCount()".
void parallelFor(std::size_t count, const std::function<void(std::size_t)>& fn,
                 std::size_t workers = 0);

}  // namespace borderlab
