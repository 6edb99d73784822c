// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "snlib/network.hpp"

namespace snlib {

/// Parameters of the divide-and-conquer cost recurrence
///   T(n) = a*n + b + (2/n) * sum_{0 <= i < n} T(i)   for n > cutoff,
///   T(n) = base_cost[n]                              for n <= cutoff.
struct CostModel {
  double per_element;             // a
  double offset;                  // b
  int cutoff;                     // M
  std::vector<double> base_cost;  // g(0..M), g(0) = 0
};

/// Classic randomized-partition models: comparisons (a=1, b=-1) and swaps
/// (a=1/6, b=2/3), both with cutoff 0.
CostModel classic_comparisons_model();
CostModel classic_swaps_model();

/// Cutoff-14 models whose base costs are the published average comparison /
/// swap counts of the best-known networks up to 14 channels.
CostModel hybrid_comparisons_model();
CostModel hybrid_swaps_model();

/// Exact evaluation of the recurrence in 64-bit floating point, O(n) via a
/// running prefix sum.
double recurrence_cost(const CostModel& model, int n);

/// All values T(1..max_n) in one pass.
std::vector<double> recurrence_table(const CostModel& model, int max_n);

/// Closed form, valid only for n > cutoff (throws std::invalid_argument
/// otherwise):
///   T(n) = 2(n+1) * sum_{M+2 <= k <= n} a/(k+1)
///        + (n+1)/(M+2) * (t(M+1) + T(M+1)) - t(n),   t(k) = a*k + b.
double closed_form_cost(const CostModel& model, int n);

enum class Leading { Comparisons, Swaps };

/// (T(n) - L(n)) / n where L(n) = 2 n ln(n+1) for comparisons and
/// (1/3) n ln(n+1) for swaps; converges to the linear-term coefficient.
double asymptotic_constant(const CostModel& model, int n, Leading leading);

/// Mode tags for empirical_g.
struct Exhaustive {};
struct Sample {
  std::uint64_t count;
  std::uint64_t seed;
};

struct EmpiricalG {
  double comparisons;
  double swaps;
};

/// Average comparator evaluations and exchanges of the network over all n!
/// permutations (channels <= 10; throws std::length_error above) or over
/// seeded random permutations.
EmpiricalG empirical_g(const LayeredNetwork& net, Exhaustive);
EmpiricalG empirical_g(const LayeredNetwork& net, Sample sample);
EmpiricalG empirical_g(const ComparatorNetwork& net, Exhaustive);
EmpiricalG empirical_g(const ComparatorNetwork& net, Sample sample);

struct CostRow {
  int n;
  double comparisons;
  double swaps;
};

/// Rows 1..max_n of the two recurrences.
std::vector<CostRow> cost_table(int max_n, const CostModel& comparisons,
                                const CostModel& swaps);

}  // namespace snlib
