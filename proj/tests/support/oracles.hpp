// SPDX-License-Identifier: Apache-2.0
//
// Independent brute-force oracles used by the tests. These deliberately
// avoid the library's bit-parallel verification and recurrence code paths.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "snlib/network.hpp"

namespace snlib::testsupport {

// Plain scalar application of a comparator sequence to one input.
inline std::vector<Key> naive_apply(const std::vector<Comparator>& comps,
                                    std::vector<Key> values, Direction dir) {
  for (Comparator c : comps) {
    Key& a = values[static_cast<std::size_t>(c.lo)];
    Key& b = values[static_cast<std::size_t>(c.hi)];
    const bool out_of_order = dir == Direction::Ascending ? b < a : a < b;
    if (out_of_order) std::swap(a, b);
  }
  return values;
}

// Checks every binary input one by one.
inline bool sorts_all_binary(const std::vector<Comparator>& comps, int n,
                             Direction dir = Direction::Ascending) {
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    std::vector<Key> v(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) v[static_cast<std::size_t>(c)] = (x >> c) & 1;
    v = naive_apply(comps, std::move(v), dir);
    const bool sorted = dir == Direction::Ascending
                            ? std::is_sorted(v.begin(), v.end())
                            : std::is_sorted(v.rbegin(), v.rend());
    if (!sorted) return false;
  }
  return true;
}

// Checks every permutation of 0..n-1 (the integer-domain ground truth).
inline bool sorts_all_permutations(const std::vector<Comparator>& comps, int n,
                                   Direction dir = Direction::Ascending) {
  std::vector<Key> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Key{0});
  do {
    auto v = naive_apply(comps, perm, dir);
    const bool sorted = dir == Direction::Ascending
                            ? std::is_sorted(v.begin(), v.end())
                            : std::is_sorted(v.rbegin(), v.rend());
    if (!sorted) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

// Per-channel projection of the comparator order; two sequences with equal
// projections compute the same function.
inline std::vector<std::vector<Comparator>> channel_projections(
    const std::vector<Comparator>& comps, int n) {
  std::vector<std::vector<Comparator>> proj(static_cast<std::size_t>(n));
  for (Comparator c : comps) {
    proj[static_cast<std::size_t>(c.lo)].push_back(c);
    proj[static_cast<std::size_t>(c.hi)].push_back(c);
  }
  return proj;
}

}  // namespace snlib::testsupport
