// SPDX-License-Identifier: Apache-2.0
#include "snlib/generators.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace snlib {

namespace {

void check_positive(int n) {
  if (n < 1) throw std::invalid_argument("channel count must be at least 1");
}

}  // namespace

ComparatorNetwork insertion_network(int n) {
  check_positive(n);
  std::vector<Comparator> comps;
  comps.reserve(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2);
  for (int i = 1; i < n; ++i)
    for (int j = i; j > 0; --j) comps.push_back({j - 1, j});
  return {n, std::move(comps)};
}

ComparatorNetwork bubble_network(int n) {
  check_positive(n);
  std::vector<Comparator> comps;
  comps.reserve(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2);
  for (int p = 1; p < n; ++p)
    for (int j = 0; j + p < n; ++j) comps.push_back({j, j + 1});
  return {n, std::move(comps)};
}

namespace {

void odd_even_merge(std::vector<Comparator>& out, int lo, int count, int stride, int n) {
  const int step = stride * 2;
  if (step < count) {
    odd_even_merge(out, lo, count, step, n);
    odd_even_merge(out, lo + stride, count, step, n);
    for (int i = lo + stride; i + stride < lo + count; i += step)
      if (i + stride < n) out.push_back({i, i + stride});
  } else if (lo + stride < n) {
    out.push_back({lo, lo + stride});
  }
}

void odd_even_sort(std::vector<Comparator>& out, int lo, int count, int n) {
  if (count <= 1) return;
  const int half = count / 2;
  odd_even_sort(out, lo, half, n);
  odd_even_sort(out, lo + half, half, n);
  odd_even_merge(out, lo, count, 1, n);
}

}  // namespace

LayeredNetwork fallback_network(int n) {
  check_positive(n);
  std::vector<Comparator> comps;
  odd_even_sort(comps, 0, static_cast<int>(std::bit_ceil(static_cast<unsigned>(n))), n);
  return to_layers(ComparatorNetwork{n, std::move(comps)});
}

ComparatorNetwork parallel_blocks_network(std::size_t total, int block_width) {
  if (total < 1) throw std::invalid_argument("block network needs at least one comparator");
  if (block_width < 1) throw std::invalid_argument("block width must be at least 1");
  const int channels = 2 * block_width;
  std::vector<Comparator> comps;
  comps.reserve(total);
  for (std::size_t k = 0; k < total; ++k) {
    const int block = static_cast<int>(k / static_cast<std::size_t>(block_width));
    const int slot = static_cast<int>(k % static_cast<std::size_t>(block_width));
    int a = (2 * slot + block) % channels;
    int b = (2 * slot + 1 + block) % channels;
    if (a > b) std::swap(a, b);
    comps.push_back({a, b});
  }
  return {channels, std::move(comps)};
}

}  // namespace snlib
