// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace snlib {

/// Key domain of the reference execution path.
using Key = std::int64_t;

/// Which end of a comparator receives the smaller key.
/// Ascending places the minimum on the lower channel index.
enum class Direction { Ascending, Descending };

/// A comparator acting on channels `lo < hi` (0-based).
struct Comparator {
  int lo;
  int hi;

  friend constexpr bool operator==(Comparator, Comparator) = default;
  friend constexpr auto operator<=>(Comparator, Comparator) = default;
};

/// Execution counters for one network application.
struct ExecStats {
  std::uint64_t comparator_evaluations = 0;
  std::uint64_t exchanges = 0;
};

/// An ordered sequence of comparators on a fixed number of channels.
class ComparatorNetwork {
 public:
  explicit ComparatorNetwork(int channels);
  ComparatorNetwork(int channels, std::vector<Comparator> comparators);

  int channels() const noexcept { return channels_; }
  std::size_t size() const noexcept { return comparators_.size(); }
  const std::vector<Comparator>& comparators() const noexcept { return comparators_; }

  bool operator==(const ComparatorNetwork&) const = default;

 private:
  int channels_;
  std::vector<Comparator> comparators_;
};

/// A network partitioned into channel-disjoint layers.
/// Comparators within a layer are kept sorted by (lo, hi); this is the
/// canonical order used by the text format and by flatten().
class LayeredNetwork {
 public:
  explicit LayeredNetwork(int channels);
  LayeredNetwork(int channels, std::vector<std::vector<Comparator>> layers);

  int channels() const noexcept { return channels_; }
  std::size_t depth() const noexcept { return layers_.size(); }
  std::size_t size() const noexcept;
  const std::vector<std::vector<Comparator>>& layers() const noexcept { return layers_; }

  bool operator==(const LayeredNetwork&) const = default;

 private:
  int channels_;
  std::vector<std::vector<Comparator>> layers_;
};

struct ApplyResult {
  std::vector<Key> output;
  ExecStats stats;
};

/// Runs the network on `input` (length must equal the channel count).
ApplyResult apply_network(const ComparatorNetwork& net, std::span<const Key> input,
                          Direction dir = Direction::Ascending);
ApplyResult apply_network(const LayeredNetwork& net, std::span<const Key> input,
                          Direction dir = Direction::Ascending);

/// Largest channel count accepted by is_sorting_network.
inline constexpr int kVerifyChannelCap = 20;

/// 0/1-principle check: true iff every binary input comes out sorted.
/// Throws std::length_error above kVerifyChannelCap.
bool is_sorting_network(const ComparatorNetwork& net, Direction dir = Direction::Ascending);
bool is_sorting_network(const LayeredNetwork& net, Direction dir = Direction::Ascending);

/// Greedy left-packing into layers: each comparator lands in the earliest
/// layer after the last one that touches either of its channels. Preserves
/// the relative order of comparators sharing a channel.
LayeredNetwork to_layers(const ComparatorNetwork& net);

/// Concatenates the layers in order (canonical order within each layer).
ComparatorNetwork flatten(const LayeredNetwork& net);

}  // namespace snlib
