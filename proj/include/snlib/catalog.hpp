// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>

#include "snlib/network.hpp"

namespace snlib {

enum class Objective { Size, Depth };

/// One embedded best-known network, re-verified on load.
struct CatalogEntry {
  int channels;
  Objective objective;
  LayeredNetwork network;
  std::size_t claimed_size;
  std::size_t claimed_depth;
};

inline constexpr int kCatalogMaxChannels = 16;

/// Published best-known comparator counts (index 1..16; sizes are optimal
/// for n <= 10) and depths. Entry 0 is unused.
std::span<const std::size_t, 17> best_known_sizes();
std::span<const std::size_t, 17> best_known_depths();

/// Returns the embedded network for `n` channels under the given objective.
/// Throws std::out_of_range outside 1..kCatalogMaxChannels (catalog miss;
/// callers may fall back to fallback_network).
const CatalogEntry& best_network(int n, Objective objective);

}  // namespace snlib
