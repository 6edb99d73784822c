// SPDX-License-Identifier: Apache-2.0
#include "snlib/catalog.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "snlib/detail/catalog_data.hpp"
#include "snlib/network_io.hpp"

namespace snlib {

namespace {

// Optimal for n <= 10, best-known upper values for 11..16.
constexpr std::array<std::size_t, 17> kSizes = {0, 0, 1,  3,  5,  9,  12, 16, 19,
                                                25, 29, 35, 39, 45, 51, 56, 60};
constexpr std::array<std::size_t, 17> kDepths = {0, 0, 1, 3, 3, 5, 5, 6, 6,
                                                 7, 7, 8, 8, 9, 9, 9, 9};

std::vector<CatalogEntry> load_catalog() {
  std::vector<CatalogEntry> entries;
  entries.reserve(detail::kEmbeddedCatalogCount);
  for (std::size_t i = 0; i < detail::kEmbeddedCatalogCount; ++i) {
    const auto& raw = detail::kEmbeddedCatalog[i];
    LayeredNetwork net = parse_network(raw.text);
    const Objective objective = raw.objective == 'S' ? Objective::Size : Objective::Depth;
    const auto tag = std::string(raw.objective == 'S' ? "size" : "depth") + " catalog n=" +
                     std::to_string(raw.channels);
    if (net.channels() != raw.channels) throw std::logic_error(tag + ": channel mismatch");
    if (!is_sorting_network(net)) throw std::logic_error(tag + ": failed 0/1 verification");
    const std::size_t n = static_cast<std::size_t>(raw.channels);
    if (objective == Objective::Size && net.size() != kSizes[n])
      throw std::logic_error(tag + ": size " + std::to_string(net.size()) +
                             " does not match the published bound " + std::to_string(kSizes[n]));
    if (objective == Objective::Depth && net.depth() != kDepths[n])
      throw std::logic_error(tag + ": depth " + std::to_string(net.depth()) +
                             " does not match the published bound " + std::to_string(kDepths[n]));
    entries.push_back({raw.channels, objective, std::move(net), 0, 0});
    entries.back().claimed_size = entries.back().network.size();
    entries.back().claimed_depth = entries.back().network.depth();
  }
  return entries;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = load_catalog();
  return entries;
}

}  // namespace

std::span<const std::size_t, 17> best_known_sizes() { return kSizes; }
std::span<const std::size_t, 17> best_known_depths() { return kDepths; }

const CatalogEntry& best_network(int n, Objective objective) {
  if (n < 1 || n > kCatalogMaxChannels)
    throw std::out_of_range("no catalog entry for " + std::to_string(n) + " channels");
  for (const auto& e : catalog())
    if (e.channels == n && e.objective == objective) return e;
  throw std::out_of_range("catalog entry missing for " + std::to_string(n) + " channels");
}

}  // namespace snlib
