#pragma once

#include <functional>

namespace pluckerlab {

// Worker budget from PLUCKER_LAB_THREADS (0 or unset = hardware auto).
int thread_budget();

// Runs fn(i) for i in [0, n) across the thread budget; exceptions from
// workers are rethrown on the calling thread.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace pluckerlab
