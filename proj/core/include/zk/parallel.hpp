#ifndef ZK_PARALLEL_HPP
#define ZK_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace zk {

/// Global worker-count knob (default: hardware concurrency).
int worker_count();
void set_worker_count(int n);

/** Run fn(i) for i in [0, n) across workers.  Each task must write only its
 * own output slot, so results are identical to a serial run regardless of
 * scheduling.  Rethrows the first task exception. */
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace zk

#endif
