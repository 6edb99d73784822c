// SPDX-License-Identifier: Apache-2.0
#include "snlib/sort.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "snlib/catalog.hpp"
#include "snlib/codegen.hpp"
#include "snlib/rng.hpp"

#include "base_cases.inc"

namespace snlib {

namespace {

struct Counting {
  SortStats* stats;
  void comparison() const { ++stats->comparisons; }
  void exchange() const { ++stats->exchanges; }
  void stage() const { ++stats->partition_stages; }
};

struct NoCount {
  static void comparison() {}
  static void exchange() {}
  static void stage() {}
};

// Flattened size-objective catalog networks, one comparator list per length.
const std::vector<Comparator>& catalog_comparators(std::size_t len) {
  static const auto lists = [] {
    std::array<std::vector<Comparator>, kCatalogMaxChannels + 1> out;
    for (int n = 2; n <= kCatalogMaxChannels; ++n)
      out[static_cast<std::size_t>(n)] =
          flatten(best_network(n, Objective::Size).network).comparators();
    return out;
  }();
  return lists[len];
}

template <class Counter>
void insertion_loop(Key* a, std::size_t len, Counter& cnt) {
  for (std::size_t i = 1; i < len; ++i) {
    for (std::size_t j = i; j > 0; --j) {
      cnt.comparison();
      if (!(a[j] < a[j - 1])) break;
      std::swap(a[j], a[j - 1]);
      cnt.exchange();
    }
  }
}

template <class Counter>
void network_branching_loop(Key* a, std::size_t len, Counter& cnt) {
  for (Comparator c : catalog_comparators(len)) {
    cnt.comparison();
    if (a[c.hi] < a[c.lo]) {
      std::swap(a[c.lo], a[c.hi]);
      cnt.exchange();
    }
  }
}

// Exchanges are not counted here: the branch-free path is data-oblivious by
// construction and performs no observable swap.
template <class Counter>
void network_branchfree_loop(Key* a, std::size_t len, Counter& cnt) {
  for (Comparator c : catalog_comparators(len)) {
    cnt.comparison();
    conditional_swap(a[c.lo], a[c.hi]);
  }
}

template <class Counter>
void dispatch_base(Key* a, std::size_t len, BaseCase base, Counter& cnt) {
  switch (base) {
    case BaseCase::None:
      break;
    case BaseCase::InsertionSort:
    case BaseCase::UnrolledInsertion:
      insertion_loop(a, len, cnt);
      break;
    case BaseCase::NetworkBranching:
      network_branching_loop(a, len, cnt);
      break;
    case BaseCase::NetworkBranchFree:
      network_branchfree_loop(a, len, cnt);
      break;
  }
}

// Fast-path dispatch hits the synthesized straight-line sorters.
inline void dispatch_base_fast(Key* a, std::size_t len, BaseCase base) {
  switch (base) {
    case BaseCase::None:
      break;
    case BaseCase::InsertionSort: {
      NoCount cnt;
      insertion_loop(a, len, cnt);
      break;
    }
    case BaseCase::UnrolledInsertion:
      gen_detail::kUnrolledInsertion[len](a);
      break;
    case BaseCase::NetworkBranching:
      gen_detail::kNetworkBranching[len](a);
      break;
    case BaseCase::NetworkBranchFree:
      gen_detail::kNetworkBranchFree[len](a);
      break;
  }
}

template <class Counter, class BaseFn>
void quicksort_impl(Key* a, std::size_t len, std::size_t threshold, BaseCase base, Counter& cnt,
                    SplitMix64& rng, BaseFn&& base_fn) {
  while (len > 1) {
    if (base != BaseCase::None && len <= threshold) {
      base_fn(a, len);
      return;
    }
    // pivot to the back, then one left-to-right scan (len-1 comparisons)
    const std::size_t pidx = static_cast<std::size_t>(rng.below(len));
    if (pidx != len - 1) {
      std::swap(a[pidx], a[len - 1]);
      cnt.exchange();
    }
    const Key pivot = a[len - 1];
    std::size_t i = 0;
    for (std::size_t j = 0; j + 1 < len; ++j) {
      cnt.comparison();
      if (a[j] < pivot) {
        if (i != j) {
          std::swap(a[i], a[j]);
          cnt.exchange();
        }
        ++i;
      }
    }
    if (i != len - 1) {
      std::swap(a[i], a[len - 1]);
      cnt.exchange();
    }
    cnt.stage();

    // recurse into the smaller side, iterate on the larger
    const std::size_t left = i;
    const std::size_t right = len - i - 1;
    if (left <= right) {
      quicksort_impl(a, left, threshold, base, cnt, rng, base_fn);
      a += i + 1;
      len = right;
    } else {
      quicksort_impl(a + i + 1, right, threshold, base, cnt, rng, base_fn);
      len = left;
    }
  }
}

std::size_t checked_threshold(int cutoff, BaseCase base) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
  const bool network = base == BaseCase::NetworkBranching || base == BaseCase::NetworkBranchFree;
  const bool unrolled = base == BaseCase::UnrolledInsertion;
  if ((network || unrolled) && cutoff > kCatalogMaxChannels)
    throw std::invalid_argument("synthesized base cases cover lengths up to " +
                                std::to_string(kCatalogMaxChannels));
  return static_cast<std::size_t>(cutoff);
}

}  // namespace

void quicksort_hybrid(std::span<Key> data, int cutoff, BaseCase base, SortStats& stats,
                      std::uint64_t seed) {
  const std::size_t threshold = checked_threshold(cutoff, base);
  Counting cnt{&stats};
  SplitMix64 rng(seed);
  quicksort_impl(data.data(), data.size(), threshold, base, cnt, rng,
                 [&](Key* a, std::size_t len) { dispatch_base(a, len, base, cnt); });
}

void quicksort_hybrid(std::span<Key> data, int cutoff, BaseCase base, std::uint64_t seed) {
  const std::size_t threshold = checked_threshold(cutoff, base);
  NoCount cnt;
  SplitMix64 rng(seed);
  quicksort_impl(data.data(), data.size(), threshold, base, cnt, rng,
                 [&](Key* a, std::size_t len) { dispatch_base_fast(a, len, base); });
}

void network_sort_smalln(std::span<Key> data, SortStats& stats) {
  if (data.size() > kCatalogMaxChannels)
    throw std::length_error("network sorter covers lengths up to " +
                            std::to_string(kCatalogMaxChannels));
  if (data.size() < 2) return;
  Counting cnt{&stats};
  network_branchfree_loop(data.data(), data.size(), cnt);
}

void network_sort_smalln(std::span<Key> data) {
  if (data.size() > kCatalogMaxChannels)
    throw std::length_error("network sorter covers lengths up to " +
                            std::to_string(kCatalogMaxChannels));
  if (data.size() < 2) return;
  gen_detail::kNetworkBranchFree[data.size()](data.data());
}

namespace {

template <class Counter>
void selection_loop(Key* a, std::size_t len, Counter& cnt) {
  for (std::size_t i = 0; i + 1 < len; ++i) {
    std::size_t min = i;
    for (std::size_t j = i + 1; j < len; ++j) {
      cnt.comparison();
      if (a[j] < a[min]) min = j;
    }
    if (min != i) {
      std::swap(a[i], a[min]);
      cnt.exchange();
    }
  }
}

template <class Counter>
void bubble_loop(Key* a, std::size_t len, Counter& cnt) {
  if (len < 2) return;
  for (std::size_t p = 1; p < len; ++p) {
    for (std::size_t j = 0; j + p < len; ++j) {
      cnt.comparison();
      if (a[j + 1] < a[j]) {
        std::swap(a[j], a[j + 1]);
        cnt.exchange();
      }
    }
  }
}

// 3x+1 gap sequence
template <class Counter>
void shell_loop(Key* a, std::size_t len, Counter& cnt) {
  std::size_t h = 1;
  while (h < len / 3) h = 3 * h + 1;
  for (; h >= 1; h /= 3) {
    for (std::size_t i = h; i < len; ++i) {
      for (std::size_t j = i; j >= h; j -= h) {
        cnt.comparison();
        if (!(a[j] < a[j - h])) break;
        std::swap(a[j], a[j - h]);
        cnt.exchange();
      }
    }
  }
}

template <class Counter>
void reference_dispatch(ReferenceAlgo algo, Key* a, std::size_t len, Counter& cnt) {
  switch (algo) {
    case ReferenceAlgo::Insertion:
      insertion_loop(a, len, cnt);
      break;
    case ReferenceAlgo::Selection:
      selection_loop(a, len, cnt);
      break;
    case ReferenceAlgo::Bubble:
      bubble_loop(a, len, cnt);
      break;
    case ReferenceAlgo::Shell:
      shell_loop(a, len, cnt);
      break;
  }
}

}  // namespace

void reference_sort(ReferenceAlgo algo, std::span<Key> data, SortStats& stats) {
  Counting cnt{&stats};
  reference_dispatch(algo, data.data(), data.size(), cnt);
}

void reference_sort(ReferenceAlgo algo, std::span<Key> data) {
  NoCount cnt;
  reference_dispatch(algo, data.data(), data.size(), cnt);
}

namespace gen {

std::span<const SortFn, 17> unrolled_insertion_sorters() {
  return gen_detail::kUnrolledInsertion;
}
std::span<const SortFn, 17> network_branching_sorters() { return gen_detail::kNetworkBranching; }
std::span<const SortFn, 17> network_branchfree_sorters() { return gen_detail::kNetworkBranchFree; }

}  // namespace gen

}  // namespace snlib
