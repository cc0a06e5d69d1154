#ifndef SEMINORM_PARALLEL_HPP
#define SEMINORM_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace seminorm {

/// Worker count: SEMINORM_THREADS when set (clamped to >= 1), otherwise
/// the hardware concurrency.
int worker_count();

/// Runs fn(i) for i in [0, n) across workers. Results must be written to
/// index-keyed slots by the caller so the outcome is schedule-independent.
/// Exceptions from workers are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace seminorm

#endif
