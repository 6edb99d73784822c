// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "snlib/network.hpp"

namespace snlib {

/// Oblivious insertion sort: for i = 1..n-1 the run (i-1,i), (i-2,i-1), ..., (0,1).
/// Size n(n-1)/2.
ComparatorNetwork insertion_network(int n);

/// Oblivious bubble sort: pass p = 1..n-1 emits (0,1), (1,2), ..., (n-1-p, n-p),
/// bubbling the maximum of the remaining prefix to the end. Size n(n-1)/2.
/// Layered, it coincides with the layered insertion network.
ComparatorNetwork bubble_network(int n);

/// Odd-even merge construction for any n (next power of two, restricted to
/// the first n channels). Verified sorting network; the stand-in when no
/// catalog entry exists.
LayeredNetwork fallback_network(int n);

/// Non-sorting stress network on 2*block_width channels: consecutive blocks
/// of block_width channel-disjoint comparators, with the pairing rotated by
/// one channel at each block boundary so neighbouring blocks stay
/// data-dependent.
ComparatorNetwork parallel_blocks_network(std::size_t total, int block_width);

}  // namespace snlib
