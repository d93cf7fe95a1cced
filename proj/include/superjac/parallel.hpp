#pragma once
// Fixed-partition worker pool helpers. Work is split into chunks whose
// boundaries do not depend on the thread count, so merged results are stable.

#include <cstddef>
#include <functional>

namespace superjac {

unsigned worker_count();
// 0 restores the default (SUPERJAC_THREADS or hardware concurrency).
void set_worker_count(unsigned n);

// Calls fn(begin, end, chunk) for chunks of [0, n) of size `grain`. Chunk k
// always covers [k*grain, min(n, (k+1)*grain)).
void parallel_for(std::size_t n, std::size_t grain, const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

inline std::size_t chunk_count(std::size_t n, std::size_t grain) { return grain == 0 ? 0 : (n + grain - 1) / grain; }

}  // namespace superjac
