#ifndef SUPEROPT_WORKERS_HPP
#define SUPEROPT_WORKERS_HPP

#include <cstddef>
#include <functional>

namespace superopt {

// Worker count: SUPEROPT_THREADS if set (clamped to [1, 64]), otherwise
// min(4, hardware concurrency).
int worker_count();

// Runs fn(i) for i in [0, n).  Work is split across workers; callers get
// deterministic results by writing to per-index slots.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace superopt

#endif
