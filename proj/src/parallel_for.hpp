#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>

#include "zkrylov/parallel.hpp"

namespace zkrylov::detail {

// Calls fn(chunk_index, begin, end) for each chunk of [0, n). Chunks are
// disjoint, so the outcome never depends on how they are scheduled.
template <typename Fn>
void for_chunks(std::size_t n, std::size_t chunk, Fn&& fn) {
  if (n == 0) return;
  const std::size_t count = (n + chunk - 1) / chunk;
  const int threads = num_threads();
#if defined(_OPENMP)
  if (threads > 1 && count > 1) {
    const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for num_threads(threads) schedule(static)
    for (std::int64_t c = 0; c < total; ++c) {
      const auto b = static_cast<std::size_t>(c) * chunk;
      fn(static_cast<std::size_t>(c), b, std::min(n, b + chunk));
    }
    return;
  }
#else
  (void)threads;
#endif
  for (std::size_t c = 0; c < count; ++c) {
    const std::size_t b = c * chunk;
    fn(c, b, std::min(n, b + chunk));
  }
}

// Granularity for elementwise kernels; large enough to amortize a fork.
inline constexpr std::size_t kElementwiseChunk = 1 << 15;

}  // namespace zkrylov::detail
