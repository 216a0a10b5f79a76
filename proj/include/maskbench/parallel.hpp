#pragma once

#include <cstddef>
#include <functional>

namespace maskbench {

/// Worker cap: MASKBENCH_THREADS when set to a positive integer, otherwise
/// the number of hardware threads (at least 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, n). Each index is handled exactly once, so
/// callers writing only to slot i get results independent of the worker
/// count. The first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  std::size_t workers = 0);

}  // namespace maskbench
