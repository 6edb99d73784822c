// SPDX-License-Identifier: Apache-2.0
#include "snlib/network.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace snlib {

namespace {

void check_channels(int channels) {
  if (channels < 1) throw std::invalid_argument("network needs a positive channel count");
}

void check_comparator(Comparator c, int channels) {
  if (c.lo < 0 || c.hi >= channels || c.lo >= c.hi)
    throw std::invalid_argument("comparator (" + std::to_string(c.lo) + "," +
                                std::to_string(c.hi) + ") invalid on " +
                                std::to_string(channels) + " channels");
}

}  // namespace

ComparatorNetwork::ComparatorNetwork(int channels) : channels_(channels) {
  check_channels(channels);
}

ComparatorNetwork::ComparatorNetwork(int channels, std::vector<Comparator> comparators)
    : channels_(channels), comparators_(std::move(comparators)) {
  check_channels(channels);
  for (Comparator c : comparators_) check_comparator(c, channels);
}

LayeredNetwork::LayeredNetwork(int channels) : channels_(channels) {
  check_channels(channels);
}

LayeredNetwork::LayeredNetwork(int channels, std::vector<std::vector<Comparator>> layers)
    : channels_(channels), layers_(std::move(layers)) {
  check_channels(channels);
  std::vector<char> used(static_cast<std::size_t>(channels));
  for (auto& layer : layers_) {
    if (layer.empty()) throw std::invalid_argument("empty layer");
    std::ranges::fill(used, 0);
    for (Comparator c : layer) {
      check_comparator(c, channels);
      if (used[static_cast<std::size_t>(c.lo)] || used[static_cast<std::size_t>(c.hi)])
        throw std::invalid_argument("layer reuses a channel");
      used[static_cast<std::size_t>(c.lo)] = used[static_cast<std::size_t>(c.hi)] = 1;
    }
    std::ranges::sort(layer);
  }
}

std::size_t LayeredNetwork::size() const noexcept {
  std::size_t k = 0;
  for (const auto& layer : layers_) k += layer.size();
  return k;
}

namespace {

inline void exchange_step(std::vector<Key>& v, Comparator c, Direction dir, ExecStats& stats) {
  ++stats.comparator_evaluations;
  Key a = v[static_cast<std::size_t>(c.lo)];
  Key b = v[static_cast<std::size_t>(c.hi)];
  const bool out_of_order = (dir == Direction::Ascending) ? (b < a) : (a < b);
  if (out_of_order) {
    v[static_cast<std::size_t>(c.lo)] = b;
    v[static_cast<std::size_t>(c.hi)] = a;
    ++stats.exchanges;
  }
}

std::vector<Key> take_input(std::span<const Key> input, int channels) {
  if (std::cmp_not_equal(input.size(), channels))
    throw std::invalid_argument("input length " + std::to_string(input.size()) +
                                " does not match channel count " + std::to_string(channels));
  return {input.begin(), input.end()};
}

}  // namespace

ApplyResult apply_network(const ComparatorNetwork& net, std::span<const Key> input,
                          Direction dir) {
  ApplyResult r{take_input(input, net.channels()), {}};
  for (Comparator c : net.comparators()) exchange_step(r.output, c, dir, r.stats);
  return r;
}

ApplyResult apply_network(const LayeredNetwork& net, std::span<const Key> input, Direction dir) {
  ApplyResult r{take_input(input, net.channels()), {}};
  for (const auto& layer : net.layers())
    for (Comparator c : layer) exchange_step(r.output, c, dir, r.stats);
  return r;
}

namespace {

// 64 binary inputs are evaluated per pass: bit L of word `v[c]` holds the
// value of channel c for input index base+L. A comparator then reduces to
// one AND and one OR.
constexpr std::uint64_t kLanePattern[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};

bool zero_one_sorts(std::span<const Comparator> comps, int n, Direction dir) {
  if (n > kVerifyChannelCap)
    throw std::length_error("0/1 verification capped at " + std::to_string(kVerifyChannelCap) +
                            " channels, got " + std::to_string(n));
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t lane_mask = total < 64 ? (std::uint64_t{1} << total) - 1 : ~std::uint64_t{0};
  std::uint64_t v[kVerifyChannelCap];
  for (std::uint64_t base = 0; base < total; base += 64) {
    for (int c = 0; c < n; ++c)
      v[c] = c < 6 ? kLanePattern[c] : ((base >> c) & 1 ? ~std::uint64_t{0} : 0);
    for (Comparator c : comps) {
      std::uint64_t& a = v[c.lo];
      std::uint64_t& b = v[c.hi];
      const std::uint64_t lo = a & b;
      const std::uint64_t hi = a | b;
      if (dir == Direction::Ascending) {
        a = lo;
        b = hi;
      } else {
        a = hi;
        b = lo;
      }
    }
    std::uint64_t bad = 0;
    for (int c = 0; c + 1 < n; ++c)
      bad |= (dir == Direction::Ascending) ? (v[c] & ~v[c + 1]) : (~v[c] & v[c + 1]);
    if (bad & lane_mask) return false;
  }
  return true;
}

}  // namespace

bool is_sorting_network(const ComparatorNetwork& net, Direction dir) {
  return zero_one_sorts(net.comparators(), net.channels(), dir);
}

bool is_sorting_network(const LayeredNetwork& net, Direction dir) {
  return is_sorting_network(flatten(net), dir);
}

LayeredNetwork to_layers(const ComparatorNetwork& net) {
  std::vector<int> last(static_cast<std::size_t>(net.channels()), -1);
  std::vector<std::vector<Comparator>> layers;
  for (Comparator c : net.comparators()) {
    const int layer = std::max(last[static_cast<std::size_t>(c.lo)],
                               last[static_cast<std::size_t>(c.hi)]) +
                      1;
    if (std::cmp_equal(layer, layers.size())) layers.emplace_back();
    layers[static_cast<std::size_t>(layer)].push_back(c);
    last[static_cast<std::size_t>(c.lo)] = last[static_cast<std::size_t>(c.hi)] = layer;
  }
  return {net.channels(), std::move(layers)};
}

ComparatorNetwork flatten(const LayeredNetwork& net) {
  std::vector<Comparator> comps;
  comps.reserve(net.size());
  for (const auto& layer : net.layers()) comps.insert(comps.end(), layer.begin(), layer.end());
  return {net.channels(), std::move(comps)};
}

}  // namespace snlib
