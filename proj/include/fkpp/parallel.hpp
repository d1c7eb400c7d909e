#pragma once

#include <cstddef>
#include <functional>

namespace fkpp {

/// Worker cap: FKPP_MAX_WORKERS if set (minimum 1), else hardware concurrency.
std::size_t max_workers();

/// Runs fn(i) for i in [0, n) across up to max_workers() threads. Callers
/// write results by index, which keeps merged output deterministic. The first
/// exception thrown by any item is rethrown after all workers join.
void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace fkpp
