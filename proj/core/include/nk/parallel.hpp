#pragma once

#include <cstddef>
#include <functional>

namespace nk::par {

/// Effective worker count: explicit override, else NIELSEN_KIT_THREADS,
/// else hardware concurrency.  Always >= 1.
int thread_count(int override_threads = 0);

/// Runs fn(0..n-1) across workers.  Callers own determinism by writing
/// into index-addressed slots; no ordering is guaranteed across indices.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  int threads = 0);

}  // namespace nk::par
