// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>

#include "snlib/network.hpp"

namespace snlib {

/// Counters observed while sorting.
struct SortStats {
  std::uint64_t comparisons = 0;
  std::uint64_t exchanges = 0;
  std::uint64_t partition_stages = 0;
};

/// What a quicksort does with subarrays of length <= cutoff.
/// None means plain quicksort: recurse all the way down, the cutoff is
/// ignored. The network variants dispatch to the size-objective catalog
/// sorter for the exact length (supported for cutoffs up to 16).
enum class BaseCase { None, InsertionSort, UnrolledInsertion, NetworkBranching, NetworkBranchFree };

enum class ReferenceAlgo { Insertion, Selection, Bubble, Shell };

/// Quicksort with a seeded uniformly random pivot swapped to the last slot
/// and a single left-to-right partition scan: a partition stage over m keys
/// performs exactly m-1 comparisons. Subarrays of length <= cutoff go to the
/// base case (lengths 0 and 1 are always already done).
void quicksort_hybrid(std::span<Key> data, int cutoff, BaseCase base, SortStats& stats,
                      std::uint64_t seed);

/// Uninstrumented variant for timing: identical behaviour, no counters, and
/// straight-line synthesized code for the unrolled / network base cases.
void quicksort_hybrid(std::span<Key> data, int cutoff, BaseCase base, std::uint64_t seed);

/// Sorts up to 16 keys by running the size-objective catalog network through
/// the branch-free compare-exchange; comparisons grow by exactly the
/// network size. Throws std::length_error above 16 keys.
void network_sort_smalln(std::span<Key> data, SortStats& stats);
void network_sort_smalln(std::span<Key> data);

/// Textbook data-dependent sorts with comparison/exchange counting.
void reference_sort(ReferenceAlgo algo, std::span<Key> data, SortStats& stats);
void reference_sort(ReferenceAlgo algo, std::span<Key> data);

namespace gen {

/// Fixed-length sorters synthesized at build time from the catalog networks
/// and the staged insertion unroller; index by length, entries 0 and 1 are
/// null (nothing to do).
using SortFn = void (*)(Key*);
std::span<const SortFn, 17> unrolled_insertion_sorters();
std::span<const SortFn, 17> network_branching_sorters();
std::span<const SortFn, 17> network_branchfree_sorters();

}  // namespace gen

}  // namespace snlib
