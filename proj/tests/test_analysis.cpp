// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "snlib/analysis.hpp"
#include "snlib/catalog.hpp"

using namespace snlib;
using doctest::Approx;

TEST_CASE("recurrence basics") {
  const auto model = classic_comparisons_model();
  SUBCASE("n=0 costs nothing") { CHECK(recurrence_cost(model, 0) == 0.0); }
  SUBCASE("n=1 partition nets out to zero comparisons") {
    CHECK(recurrence_cost(model, 1) == Approx(0.0));
  }
  SUBCASE("n=2: hand-unrolled T2 = 1 + (T0 + T1 + T1 + T0)/2 = 1") {
    CHECK(recurrence_cost(model, 2) == Approx(1.0));
  }
  SUBCASE("n=3: 2 - 1 + (2/3)(0 + 0 + 1) = 5/3") {
    CHECK(recurrence_cost(model, 3) == Approx(5.0 / 3.0).epsilon(1e-12));
  }
}

TEST_CASE("the cutoff table short-circuits the recurrence") {
  const auto model = hybrid_comparisons_model();
  CHECK(recurrence_cost(model, 14) == 51.0);
  CHECK(recurrence_cost(model, 5) == 9.0);
  CHECK(recurrence_cost(model, 1) == 0.0);
}

TEST_CASE("recurrence is monotone above the cutoff") {
  for (const auto& model : {classic_comparisons_model(), classic_swaps_model(),
                            hybrid_comparisons_model(), hybrid_swaps_model()}) {
    const auto table = recurrence_table(model, 2000);
    for (int n = model.cutoff + 2; n <= 2000; ++n)
      CHECK(table[static_cast<std::size_t>(n)] >= table[static_cast<std::size_t>(n) - 1]);
  }
}

TEST_CASE("closed form agrees with the recurrence") {
  SUBCASE("classic comparisons at n=100") {
    const auto model = classic_comparisons_model();
    const double r = recurrence_cost(model, 100);
    CHECK(std::abs(closed_form_cost(model, 100) - r) / r <= 1e-9);
  }
  SUBCASE("classic swaps at n=50") {
    const auto model = classic_swaps_model();
    const double r = recurrence_cost(model, 50);
    CHECK(std::abs(closed_form_cost(model, 50) - r) / r <= 1e-9);
  }
  SUBCASE("below or at the cutoff is a domain error") {
    CHECK_THROWS_AS(closed_form_cost(classic_comparisons_model(), 0), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_cost(hybrid_comparisons_model(), 14), std::invalid_argument);
  }
}

TEST_CASE("asymptotic constants converge to the known linear coefficients") {
  // gamma = 0.5772...; classic comparisons tend to 2*gamma - 4, classic
  // swaps to gamma/3 + 1/6; checked tighter at n = 1e6 in the acceptance run
  CHECK(asymptotic_constant(classic_comparisons_model(), 100000, Leading::Comparisons) ==
        Approx(-2.84557).epsilon(2e-4));
  CHECK(asymptotic_constant(classic_swaps_model(), 100000, Leading::Swaps) ==
        Approx(0.359072).epsilon(2e-4));
}

TEST_CASE("modified quicksort costs more comparisons and swaps at scale") {
  const int n = 100000;
  CHECK(recurrence_cost(hybrid_comparisons_model(), n) >
        recurrence_cost(classic_comparisons_model(), n));
  CHECK(recurrence_cost(hybrid_swaps_model(), n) > recurrence_cost(classic_swaps_model(), n));
}

TEST_CASE("empirical averages, exhaustive") {
  SUBCASE("five-channel catalog network: 9 comparisons, 4.8 swaps") {
    const auto g = empirical_g(best_network(5, Objective::Size).network, Exhaustive{});
    CHECK(g.comparisons == 9.0);
    CHECK(g.swaps == Approx(4.8).epsilon(1e-12));
  }
  SUBCASE("single comparator: (1, 0.5) by symmetry") {
    const auto g = empirical_g(ComparatorNetwork{2, {{0, 1}}}, Exhaustive{});
    CHECK(g.comparisons == 1.0);
    CHECK(g.swaps == 0.5);
  }
  SUBCASE("empty network on one channel: (0, 0)") {
    const auto g = empirical_g(ComparatorNetwork{1}, Exhaustive{});
    CHECK(g.comparisons == 0.0);
    CHECK(g.swaps == 0.0);
  }
  SUBCASE("capacity error above 10 channels") {
    CHECK_THROWS_AS(empirical_g(ComparatorNetwork{11}, Exhaustive{}), std::length_error);
  }
}

TEST_CASE("published swap averages for the small catalog networks") {
  // the published table pins 0.5, 1.5, 2.7, 4.8 for n = 2..5 (+-0.05); the
  // rows for n >= 6 depend on unidentified networks, so mismatches there are
  // reported but not enforced
  constexpr double published[9] = {0, 0, 0.5, 1.5, 2.7, 4.8, 6.6, 8.6, 10.6};
  for (int n = 2; n <= 5; ++n) {
    const auto g = empirical_g(best_network(n, Objective::Size).network, Exhaustive{});
    CHECK(g.comparisons == static_cast<double>(best_known_sizes()[static_cast<std::size_t>(n)]));
    CHECK(g.swaps == Approx(published[n]).epsilon(0.05 / published[n]));
  }
  for (int n = 6; n <= 8; ++n) {
    const auto g = empirical_g(best_network(n, Objective::Size).network, Exhaustive{});
    if (std::abs(g.swaps - published[n]) > 0.05)
      MESSAGE("catalog network for n=", n, " averages ", g.swaps,
              " swaps; published table says ", published[n]);
  }
}

TEST_CASE("sampled averages converge to the exhaustive ones") {
  const auto& net = best_network(5, Objective::Size).network;
  const auto exact = empirical_g(net, Exhaustive{});
  const auto sampled = empirical_g(net, Sample{1000000, 20240229});
  CHECK(sampled.comparisons == exact.comparisons);
  CHECK(std::abs(sampled.swaps - exact.swaps) <= 0.01);
}

TEST_CASE("sampling is deterministic in the seed") {
  const auto& net = best_network(4, Objective::Size).network;
  const auto a = empirical_g(net, Sample{1000, 7});
  const auto b = empirical_g(net, Sample{1000, 7});
  CHECK(a.swaps == b.swaps);
}

TEST_CASE("cost table") {
  SUBCASE("classic rows start (0, s1), (1, s2)") {
    const auto rows = cost_table(2, classic_comparisons_model(), classic_swaps_model());
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].n == 1);
    CHECK(rows[0].comparisons == Approx(0.0));
    CHECK(rows[0].swaps == Approx(recurrence_cost(classic_swaps_model(), 1)));
    CHECK(rows[1].comparisons == Approx(1.0));
    CHECK(rows[1].swaps == Approx(recurrence_cost(classic_swaps_model(), 2)));
  }
  SUBCASE("hybrid rows echo the base-cost table up to the cutoff") {
    const auto rows = cost_table(14, hybrid_comparisons_model(), hybrid_swaps_model());
    const auto comparisons = hybrid_comparisons_model();
    const auto swaps = hybrid_swaps_model();
    for (const auto& row : rows) {
      CHECK(row.comparisons == comparisons.base_cost[static_cast<std::size_t>(row.n)]);
      CHECK(row.swaps == swaps.base_cost[static_cast<std::size_t>(row.n)]);
    }
  }
  SUBCASE("maxN=0 gives an empty table") {
    CHECK(cost_table(0, classic_comparisons_model(), classic_swaps_model()).empty());
  }
}
