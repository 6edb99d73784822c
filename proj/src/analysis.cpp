// SPDX-License-Identifier: Apache-2.0
#include "snlib/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "snlib/rng.hpp"

namespace snlib {

namespace {

void check_model(const CostModel& model) {
  if (model.cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
  if (std::cmp_not_equal(model.base_cost.size(), model.cutoff + 1))
    throw std::invalid_argument("base cost table must cover sizes 0..cutoff");
}

// Published average comparison / swap counts of best-known networks, n = 1..14.
constexpr double kNetworkComparisons[15] = {0, 0, 1, 3, 5, 9, 12, 16, 19, 25, 29, 35, 39, 45, 51};
constexpr double kNetworkSwaps[15] = {0,    0.0,  0.5,  1.5,  2.7,  4.8,  6.6, 8.6,
                                      10.6, 13.0, 11.1, 19.4, 22.4, 20.0, 26.5};

}  // namespace

CostModel classic_comparisons_model() { return {1.0, -1.0, 0, {0.0}}; }
CostModel classic_swaps_model() { return {1.0 / 6.0, 2.0 / 3.0, 0, {0.0}}; }

CostModel hybrid_comparisons_model() {
  return {1.0, -1.0, 14, std::vector<double>(kNetworkComparisons, kNetworkComparisons + 15)};
}

CostModel hybrid_swaps_model() {
  return {1.0 / 6.0, 2.0 / 3.0, 14, std::vector<double>(kNetworkSwaps, kNetworkSwaps + 15)};
}

std::vector<double> recurrence_table(const CostModel& model, int max_n) {
  check_model(model);
  if (max_n < 0) throw std::invalid_argument("max_n must be nonnegative");
  std::vector<double> t(static_cast<std::size_t>(max_n) + 1);
  double prefix = 0.0;  // sum of t[0..n-1]
  for (int n = 0; n <= max_n; ++n) {
    if (n <= model.cutoff)
      t[static_cast<std::size_t>(n)] = model.base_cost[static_cast<std::size_t>(n)];
    else
      t[static_cast<std::size_t>(n)] =
          model.per_element * n + model.offset + 2.0 * prefix / n;
    prefix += t[static_cast<std::size_t>(n)];
  }
  return t;
}

double recurrence_cost(const CostModel& model, int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  return recurrence_table(model, n).back();
}

double closed_form_cost(const CostModel& model, int n) {
  check_model(model);
  const int m = model.cutoff;
  if (n <= m) throw std::invalid_argument("closed form is valid only above the cutoff");
  const double a = model.per_element;
  const double b = model.offset;
  auto affine = [&](int k) { return a * k + b; };

  double harmonic_tail = 0.0;  // sum over M+2 <= k <= n of 1/(k+1)
  for (int k = m + 2; k <= n; ++k) harmonic_tail += 1.0 / (k + 1);

  const double boundary = recurrence_cost(model, m + 1);
  return 2.0 * (n + 1) * a * harmonic_tail +
         static_cast<double>(n + 1) / (m + 2) * (affine(m + 1) + boundary) - affine(n);
}

double asymptotic_constant(const CostModel& model, int n, Leading leading) {
  const double t = closed_form_cost(model, n);
  const double scale = leading == Leading::Comparisons ? 2.0 : 1.0 / 3.0;
  return (t - scale * n * std::log(n + 1.0)) / n;
}

namespace {

EmpiricalG empirical_over(std::span<const Comparator> comps, int channels, Exhaustive) {
  if (channels > 10)
    throw std::length_error("exhaustive averaging capped at 10 channels");
  std::vector<Key> perm(static_cast<std::size_t>(channels));
  std::iota(perm.begin(), perm.end(), Key{0});
  std::uint64_t runs = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t swaps = 0;
  std::vector<Key> work(perm.size());
  do {
    work = perm;
    for (Comparator c : comps) {
      ++comparisons;
      Key& a = work[static_cast<std::size_t>(c.lo)];
      Key& b = work[static_cast<std::size_t>(c.hi)];
      if (b < a) {
        std::swap(a, b);
        ++swaps;
      }
    }
    ++runs;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {static_cast<double>(comparisons) / static_cast<double>(runs),
          static_cast<double>(swaps) / static_cast<double>(runs)};
}

EmpiricalG empirical_over(std::span<const Comparator> comps, int channels, Sample sample) {
  if (sample.count == 0) throw std::invalid_argument("sample count must be positive");
  SplitMix64 rng(sample.seed);
  std::vector<Key> work(static_cast<std::size_t>(channels));
  std::uint64_t comparisons = 0;
  std::uint64_t swaps = 0;
  for (std::uint64_t run = 0; run < sample.count; ++run) {
    std::iota(work.begin(), work.end(), Key{0});
    shuffle(std::span<Key>(work), rng);
    for (Comparator c : comps) {
      ++comparisons;
      Key& a = work[static_cast<std::size_t>(c.lo)];
      Key& b = work[static_cast<std::size_t>(c.hi)];
      if (b < a) {
        std::swap(a, b);
        ++swaps;
      }
    }
  }
  return {static_cast<double>(comparisons) / static_cast<double>(sample.count),
          static_cast<double>(swaps) / static_cast<double>(sample.count)};
}

}  // namespace

EmpiricalG empirical_g(const LayeredNetwork& net, Exhaustive mode) {
  return empirical_g(flatten(net), mode);
}

EmpiricalG empirical_g(const LayeredNetwork& net, Sample sample) {
  return empirical_g(flatten(net), sample);
}

EmpiricalG empirical_g(const ComparatorNetwork& net, Exhaustive mode) {
  return empirical_over(net.comparators(), net.channels(), mode);
}

EmpiricalG empirical_g(const ComparatorNetwork& net, Sample sample) {
  return empirical_over(net.comparators(), net.channels(), sample);
}

std::vector<CostRow> cost_table(int max_n, const CostModel& comparisons,
                                const CostModel& swaps) {
  if (max_n < 0) throw std::invalid_argument("max_n must be nonnegative");
  const auto c = recurrence_table(comparisons, max_n);
  const auto s = recurrence_table(swaps, max_n);
  std::vector<CostRow> rows;
  rows.reserve(static_cast<std::size_t>(max_n));
  for (int n = 1; n <= max_n; ++n)
    rows.push_back({n, c[static_cast<std::size_t>(n)], s[static_cast<std::size_t>(n)]});
  return rows;
}

}  // namespace snlib
