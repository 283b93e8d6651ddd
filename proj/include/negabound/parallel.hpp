#pragma once

#include <functional>

namespace negabound {

/// Worker cap: NEGABOUND_THREADS when set (minimum 1), otherwise the
/// hardware concurrency.
int max_threads();

/// Runs fn(i) for i in [0, n). Iterations may execute on up to max_threads()
/// workers; callers keep determinism by writing results into slot i only.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace negabound
