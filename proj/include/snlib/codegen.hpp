// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "snlib/network.hpp"

namespace snlib {

/// Comparator realizations for synthesized sorters.
///  - BranchingIf: guarded swap, one branch per comparator.
///  - CondMove:    copy, one comparison, two conditional assignments
///                 (compiles to MOV, CMP, 2x CMOV).
///  - XorSwap:     copy, one comparison, one conditional assignment, one
///                 XOR-combine (MOV, CMP, CMOV, 2x XOR).
///  - MinMax:      arithmetic min/max selection via a sign mask; emitted for
///                 completeness but not recommended -- compilers tend not to
///                 lower it as well as CondMove/XorSwap.
enum class ComparatorStyle { BranchingIf, CondMove, XorSwap, MinMax };

enum class EmitTarget { CSource, Pseudocode };

/// Synthesizes a straight-line sorter for the given network: one function
/// taking an array of `channels` keys, one source line per layer, one
/// comparator block per comparator, no loops, and no control flow for the
/// non-branching styles. The network must verify as a sorting network
/// (std::invalid_argument otherwise).
std::string emit_sorter(const LayeredNetwork& net, ComparatorStyle style, EmitTarget target,
                        std::string_view name);

/// Stages of unrolling insertion sort down to a sorting network:
/// nested loops, outer loop unrolled, data-oblivious inner loops, the full
/// guarded-swap sequence, and its layer-compressed form.
enum class InsertionStage { Loops, OuterUnrolled, Oblivious, FullyUnrolled, Layered };

/// Emits the C source for one stage of the pipeline, generalized from the
/// five-input original to 2 <= n <= 16.
std::string emit_staged_insertion(int n, InsertionStage stage);

/// Branch-free compare-exchange: orders the pair in place with exactly one
/// comparison and conditional selection instead of control flow.
inline void conditional_swap(Key& lo, Key& hi) noexcept {
  const bool out_of_order = hi < lo;
  const Key a = lo;
  const Key b = hi;
  lo = out_of_order ? b : a;
  hi = out_of_order ? a : b;
}

/// Functional form: returns (min, max).
inline std::pair<Key, Key> branchfree_conditional_swap(Key lo, Key hi) noexcept {
  conditional_swap(lo, hi);
  return {lo, hi};
}

}  // namespace snlib
