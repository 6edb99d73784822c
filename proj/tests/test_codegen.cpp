// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <string>

#include "snlib/catalog.hpp"
#include "snlib/codegen.hpp"
#include "snlib/generators.hpp"
#include "snlib/rng.hpp"
#include "support/emitted_interpreter.hpp"

using namespace snlib;
namespace ts = snlib::testsupport;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t hits = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++hits;
  return hits;
}

std::size_t body_lines(const std::string& text) {
  // lines between the function header and the closing brace
  const std::size_t open = text.find("{\n");
  const std::size_t close = text.rfind("}\n");
  return count(text.substr(open + 2, close - open - 2), "\n");
}

std::vector<Key> binary_input(std::uint64_t bits, int n) {
  std::vector<Key> v(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) v[static_cast<std::size_t>(c)] = (bits >> c) & 1;
  return v;
}

}  // namespace

TEST_CASE("emit_sorter structure") {
  const auto& five = best_network(5, Objective::Size).network;

  SUBCASE("one line per layer, one block per comparator") {
    const auto text = emit_sorter(five, ComparatorStyle::CondMove, EmitTarget::CSource, "s5");
    CHECK(body_lines(text) == 6);
    CHECK(count(text, "int64_t t") == 9);  // one temporary copy per block
    CHECK(count(text, "<") == 9);          // one comparison per block
    CHECK(count(text, "?") == 18);         // two conditional assignments per block
    CHECK(count(text, "if") == 0);
    CHECK(count(text, "for") == 0);
    CHECK(count(text, "^=") == 0);
  }
  SUBCASE("XorSwap blocks carry one conditional assignment and one combine") {
    const auto text = emit_sorter(five, ComparatorStyle::XorSwap, EmitTarget::CSource, "s5");
    CHECK(count(text, "?") == 9);
    CHECK(count(text, "^=") == 9);
    CHECK(count(text, "int64_t t") == 9);
    CHECK(count(text, "if") == 0);
  }
  SUBCASE("BranchingIf blocks are guarded swaps") {
    const auto text = emit_sorter(five, ComparatorStyle::BranchingIf, EmitTarget::CSource, "s5");
    CHECK(count(text, "if (") == 9);
    CHECK(count(text, "?") == 0);
  }
  SUBCASE("MinMax blocks are pure arithmetic") {
    const auto text = emit_sorter(five, ComparatorStyle::MinMax, EmitTarget::CSource, "s5");
    CHECK(count(text, "?") == 0);
    CHECK(count(text, "if") == 0);
    CHECK(count(text, "^=") == 18);  // both channels get the masked difference
  }
  SUBCASE("deterministic byte-exact emission") {
    const LayeredNetwork tiny{2, {{{0, 1}}}};
    const auto text = emit_sorter(tiny, ComparatorStyle::CondMove, EmitTarget::CSource, "sort2");
    CHECK(text ==
          "static inline void sort2(int64_t *a) {\n"
          "  { int64_t t0 = a[0]; int c0 = a[1] < t0; a[0] = c0 ? a[1] : a[0]; "
          "a[1] = c0 ? t0 : a[1]; }\n"
          "}\n");
    CHECK(emit_sorter(tiny, ComparatorStyle::CondMove, EmitTarget::CSource, "sort2") == text);
  }
  SUBCASE("pseudocode target") {
    const auto text = emit_sorter(five, ComparatorStyle::CondMove, EmitTarget::Pseudocode, "s5");
    CHECK(count(text, "layer:") == 6);
    CHECK(count(text, "compare-exchange") == 9);
  }
  SUBCASE("empty network on one channel emits an empty body") {
    const auto text =
        emit_sorter(LayeredNetwork{1}, ComparatorStyle::CondMove, EmitTarget::CSource, "noop");
    CHECK(text == "static inline void noop(int64_t *a) {\n}\n");
  }
  SUBCASE("refuses non-sorting networks") {
    const LayeredNetwork broken{3, {{{0, 1}}}};
    CHECK_THROWS_AS(
        emit_sorter(broken, ComparatorStyle::CondMove, EmitTarget::CSource, "nope"),
        std::invalid_argument);
  }
}

TEST_CASE("interpreted emissions match apply_network on all binary inputs") {
  for (int n = 2; n <= 6; ++n) {
    const auto& net = best_network(n, Objective::Size).network;
    for (auto style : {ComparatorStyle::BranchingIf, ComparatorStyle::CondMove,
                       ComparatorStyle::XorSwap, ComparatorStyle::MinMax}) {
      const auto text = emit_sorter(net, style, EmitTarget::CSource, "f");
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        const auto input = binary_input(bits, n);
        CHECK(ts::interpret_emitted_sorter(text, input) == apply_network(net, input).output);
      }
    }
  }
}

TEST_CASE("staged insertion emission") {
  SUBCASE("fully unrolled n=5 lists the ten guarded swaps in insertion order") {
    const auto text = emit_staged_insertion(5, InsertionStage::FullyUnrolled);
    CHECK(count(text, "COMP(") == 10);
    const std::size_t last_row = text.rfind("COMP(3, 4)");
    REQUIRE(last_row != std::string::npos);
    CHECK(text.find("COMP(2, 3)", last_row) != std::string::npos);
    // interpreted, it equals the insertion network
    const auto net = insertion_network(5);
    for (std::uint64_t bits = 0; bits < 32; ++bits) {
      const auto input = binary_input(bits, 5);
      CHECK(ts::interpret_emitted_sorter(text, input) == apply_network(net, input).output);
    }
  }
  SUBCASE("layered n=5 compresses to 7 rows") {
    const auto text = emit_staged_insertion(5, InsertionStage::Layered);
    CHECK(body_lines(text) == 7);
    CHECK(count(text, "COMP(") == 10);
    const auto net = insertion_network(5);
    for (std::uint64_t bits = 0; bits < 32; ++bits) {
      const auto input = binary_input(bits, 5);
      CHECK(ts::interpret_emitted_sorter(text, input) == apply_network(net, input).output);
    }
  }
  SUBCASE("n=2 fully unrolled is one guarded swap") {
    CHECK(count(emit_staged_insertion(2, InsertionStage::FullyUnrolled), "COMP(") == 1);
  }
  SUBCASE("loop stages mention the expected loop structure") {
    const auto loops = emit_staged_insertion(5, InsertionStage::Loops);
    CHECK(count(loops, "for (") == 2);
    const auto outer = emit_staged_insertion(5, InsertionStage::OuterUnrolled);
    CHECK(count(outer, "for (") == 4);
    CHECK(count(outer, "j > 0 && a[j] < a[j-1]") == 4);
    const auto oblivious = emit_staged_insertion(5, InsertionStage::Oblivious);
    CHECK(count(oblivious, "for (") == 4);
    CHECK(count(oblivious, "j > 0;") == 4);
    CHECK(count(oblivious, "if (a[j] < a[j-1])") == 4);
  }
  SUBCASE("range errors") {
    CHECK_THROWS_AS(emit_staged_insertion(1, InsertionStage::Loops), std::invalid_argument);
    CHECK_THROWS_AS(emit_staged_insertion(17, InsertionStage::Loops), std::invalid_argument);
  }
}

TEST_CASE("branch-free conditional swap") {
  SUBCASE("ordering examples") {
    CHECK(branchfree_conditional_swap(7, 3) == std::pair<Key, Key>{3, 7});
    CHECK(branchfree_conditional_swap(3, 7) == std::pair<Key, Key>{3, 7});
    CHECK(branchfree_conditional_swap(5, 5) == std::pair<Key, Key>{5, 5});
  }
  SUBCASE("agrees with min/max across the 16-bit domain") {
    for (int x = std::numeric_limits<std::int16_t>::min();
         x <= std::numeric_limits<std::int16_t>::max(); x += 7) {
      for (int y = std::numeric_limits<std::int16_t>::min();
           y <= std::numeric_limits<std::int16_t>::max(); y += 13) {
        const auto [lo, hi] = branchfree_conditional_swap(x, y);
        CHECK(lo == std::min<Key>(x, y));
        CHECK(hi == std::max<Key>(x, y));
      }
    }
  }
  SUBCASE("extreme values do not overflow") {
    const Key lo = std::numeric_limits<Key>::min();
    const Key hi = std::numeric_limits<Key>::max();
    CHECK(branchfree_conditional_swap(hi, lo) == std::pair<Key, Key>{lo, hi});
    CHECK(branchfree_conditional_swap(lo, hi) == std::pair<Key, Key>{lo, hi});
  }
}

TEST_CASE("XOR-combine identity") {
  // the second conditional assignment can be replaced by y ^ old-x ^ new-x
  auto xor_block = [](Key x, Key y) {
    const Key ax = x;
    const Key nx = y < ax ? y : x;
    const Key ny = y ^ ax ^ nx;
    return std::pair<Key, Key>{nx, ny};
  };
  SplitMix64 rng(314159);
  for (int i = 0; i < 1000000; ++i) {
    const Key x = static_cast<Key>(rng.next());
    const Key y = static_cast<Key>(rng.next());
    const auto [lo, hi] = xor_block(x, y);
    CHECK(lo == std::min(x, y));
    CHECK(hi == std::max(x, y));
  }
  for (Key x : {std::numeric_limits<Key>::min(), Key{-1}, Key{0}, Key{1},
                std::numeric_limits<Key>::max()})
    for (Key y : {std::numeric_limits<Key>::min(), Key{-1}, Key{0}, Key{1},
                  std::numeric_limits<Key>::max()}) {
      const auto [lo, hi] = xor_block(x, y);
      CHECK(lo == std::min(x, y));
      CHECK(hi == std::max(x, y));
    }
}
