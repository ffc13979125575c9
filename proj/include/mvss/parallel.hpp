#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace mvss {

/// Worker count from WORKBENCH_THREADS (integer >= 1), default 1.
std::size_t worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads.
/// Each index is processed exactly once; callers write into per-index slots
/// so results are merged in index order regardless of scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace mvss
