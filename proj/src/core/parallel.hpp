#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace zslpose {

/// Number of workers to use. `requested` = 0 means hardware concurrency.
/// The ZSL_ATTR_THREADS environment variable, when set, caps the result.
int worker_count(int requested = 0);

/// Runs fn(i) for i in [0, n) across worker threads. Work items must be
/// independent; callers get determinism by writing results into per-index
/// slots and reducing in index order afterwards. The first exception thrown
/// by any item is rethrown on the calling thread.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace zslpose
