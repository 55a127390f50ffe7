#pragma once

#include <cstddef>
#include <functional>

namespace rpq {

// Upper bound on threads used inside kernels. Initialised from the
// RPQ_THREADS environment variable, falling back to the hardware concurrency.
unsigned kernel_threads() noexcept;
void set_kernel_threads(unsigned n) noexcept;

// Runs body(begin, end) over contiguous chunks of [0, count), one chunk per
// worker, and joins before returning. Chunk boundaries depend only on `count`
// and `workers`.
void parallel_chunks(std::size_t count, unsigned workers,
                     const std::function<void(std::size_t, std::size_t, unsigned)>& body);

}  // namespace rpq
