#pragma once

#include <cstddef>
#include <functional>

namespace hypermap {

/// Runs fn(i) for every i in [0, count) on up to `threads` workers.
/// Work is claimed from a shared atomic counter; callers get determinism
/// by writing results into slot i, never by relying on execution order.
/// A first thrown exception is captured and rethrown after the join.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

/// Worker-count default: the flag when given, else the HYPERMAP_THREADS
/// environment variable, else hardware parallelism (at least 1).
int resolve_thread_count(int flag_value);

}  // namespace hypermap
