#pragma once

#include <cstddef>
#include <functional>

namespace coarselab {

/// Worker count used by the parallel scans. Defaults to the COARSELAB_THREADS
/// environment variable, falling back to the hardware concurrency.
int thread_count();

/// Overrides the worker count for the rest of the process (0 restores the default).
void set_thread_count(int threads);

/// Splits [0, n) into contiguous chunks, one per worker, and runs
/// `body(begin, end, chunk_index)` on each. Returns the number of chunks so
/// callers can size per-chunk accumulators; chunk boundaries depend only on
/// `n` and the chunk count, never on scheduling.
std::size_t parallel_chunks(std::size_t n,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

/// Number of chunks `parallel_chunks` will use for a range of size `n`.
std::size_t chunk_count(std::size_t n);

/// Convenience wrapper: runs `body(i)` for every i in [0, n).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace coarselab
