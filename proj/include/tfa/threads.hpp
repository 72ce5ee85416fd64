#pragma once

#include <functional>

namespace tfa {

// number of worker threads: TF_THREADS env var, 0 or unset = hardware count.
int thread_count();

// run fn(i) for i in [0, count) across threads, contiguous chunks.
// each index writes only its own output, so results are bitwise
// independent of the thread count.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace tfa
