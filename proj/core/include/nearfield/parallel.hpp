#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace nearfield {

/// Worker count used by the block loops. Initialized from REFLECTOR_THREADS,
/// falling back to the hardware count. Thread count never changes results:
/// work is split into fixed blocks and reduced in fixed order.
int thread_count();
void set_thread_count(int n);

constexpr std::size_t kTallyBlock = 4096;

/// Runs fn(block_index, begin, end) for every block of `block` consecutive
/// indices in [0, n). Blocks are claimed by workers in arbitrary order, so fn
/// must only write to slots keyed by block_index.
void parallel_blocks(std::size_t n, std::size_t block,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

/// Pairwise tree sum in fixed order; bit-stable regardless of how the
/// addends were produced.
double pairwise_sum(std::span<const double> values);

}  // namespace nearfield
