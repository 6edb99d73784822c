// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "snlib/analysis.hpp"
#include "snlib/bench.hpp"
#include "snlib/catalog.hpp"
#include "snlib/codegen.hpp"
#include "snlib/generators.hpp"
#include "snlib/network_io.hpp"
#include "snlib/rng.hpp"
#include "snlib/sort.hpp"

namespace {

using namespace snlib;

int run_gen(const std::string& kind, int n, const std::string& objective, std::size_t total,
            int block_width) {
  LayeredNetwork net{1};
  if (kind == "insertion") {
    net = to_layers(insertion_network(n));
  } else if (kind == "bubble") {
    net = to_layers(bubble_network(n));
  } else if (kind == "best") {
    net = best_network(n, objective == "depth" ? Objective::Depth : Objective::Size).network;
  } else if (kind == "fallback") {
    net = fallback_network(n);
  } else if (kind == "blocks") {
    net = to_layers(parallel_blocks_network(total, block_width));
  } else {
    std::cerr << "unknown kind '" << kind << "'\n";
    return 1;
  }
  std::cout << format_network(net);
  return 0;
}

int run_analyze(int max_n, const std::string& model, const std::string& costs,
                const std::string& csv_path) {
  const CostModel comparisons =
      model == "hybrid" ? hybrid_comparisons_model() : classic_comparisons_model();
  const CostModel swaps = model == "hybrid" ? hybrid_swaps_model() : classic_swaps_model();
  const auto rows = cost_table(max_n, comparisons, swaps);

  std::ostringstream out;
  out << "n,comparisons,swaps\n";
  for (const auto& row : rows) {
    out << row.n << ',';
    if (costs != "swaps") out << row.comparisons;
    out << ',';
    if (costs != "comparisons") out << row.swaps;
    out << '\n';
  }
  if (csv_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(csv_path);
    if (!f) {
      std::cerr << "cannot write " << csv_path << "\n";
      return 1;
    }
    f << out.str();
  }
  return 0;
}

int run_emit(int n, const std::string& style_name, const std::string& target_name,
             const std::string& network_path) {
  ComparatorStyle style = ComparatorStyle::CondMove;
  if (style_name == "if") style = ComparatorStyle::BranchingIf;
  else if (style_name == "cmov") style = ComparatorStyle::CondMove;
  else if (style_name == "xor") style = ComparatorStyle::XorSwap;
  else if (style_name == "minmax") style = ComparatorStyle::MinMax;
  else {
    std::cerr << "unknown style '" << style_name << "'\n";
    return 1;
  }
  const EmitTarget target = target_name == "pseudo" ? EmitTarget::Pseudocode : EmitTarget::CSource;

  LayeredNetwork net{1};
  if (network_path.empty()) {
    net = best_network(n, Objective::Size).network;
  } else {
    std::ifstream f(network_path);
    if (!f) {
      std::cerr << "cannot read " << network_path << "\n";
      return 1;
    }
    std::ostringstream text;
    text << f.rdbuf();
    net = parse_network(text.str());
    n = net.channels();
  }
  const std::string name = "sort" + std::to_string(n) + "_" + style_name;
  if (target == EmitTarget::CSource) std::cout << "#include <stdint.h>\n\n";
  std::cout << emit_sorter(net, style, target, name);
  return 0;
}

int run_sort(const std::string& algo, int cutoff, const std::string& base_name, int len,
             std::uint64_t seed, bool print_stats) {
  SplitMix64 rng(seed);
  std::vector<Key> data(static_cast<std::size_t>(len));
  for (auto& k : data) k = static_cast<Key>(rng.next());

  SortStats stats;
  if (algo == "qsort-hybrid") {
    BaseCase base = BaseCase::None;
    if (base_name == "none") base = BaseCase::None;
    else if (base_name == "insertion") base = BaseCase::InsertionSort;
    else if (base_name == "ins-unrolled") base = BaseCase::UnrolledInsertion;
    else if (base_name == "net-branch") base = BaseCase::NetworkBranching;
    else if (base_name == "net-free") base = BaseCase::NetworkBranchFree;
    else {
      std::cerr << "unknown base case '" << base_name << "'\n";
      return 1;
    }
    quicksort_hybrid(data, cutoff, base, stats, mix_seed(seed, 0x5157));
  } else {
    std::map<std::string, ReferenceAlgo> kinds{{"insertion", ReferenceAlgo::Insertion},
                                               {"selection", ReferenceAlgo::Selection},
                                               {"bubble", ReferenceAlgo::Bubble},
                                               {"shell", ReferenceAlgo::Shell}};
    auto it = kinds.find(algo);
    if (it == kinds.end()) {
      std::cerr << "unknown algorithm '" << algo << "'\n";
      return 1;
    }
    reference_sort(it->second, data, stats);
  }

  if (!std::is_sorted(data.begin(), data.end())) {
    std::cerr << "output not sorted\n";
    return 1;
  }
  std::cout << "sorted " << len << " keys with " << algo;
  if (algo == "qsort-hybrid") std::cout << " (cutoff " << cutoff << ", base " << base_name << ")";
  std::cout << "\n";
  if (print_stats)
    std::cout << "comparisons=" << stats.comparisons << " exchanges=" << stats.exchanges
              << " stages=" << stats.partition_stages << "\n";
  return 0;
}

int run_bench_cmd(const std::string& suite, int reps, std::uint64_t seed,
                  const std::string& csv_path, const std::string& timer_name) {
  const TimerKind timer =
      timer_name == "cycles" ? TimerKind::CycleCounter : TimerKind::MonotonicNs;
  if (suite == "small-n") {
    BenchConfig config;
    config.algorithms = {"insertion",  "selection",  "bubble",     "shell",
                         "ins-unrolled", "net-ins-if", "net-ins-layered-if", "net-best-if",
                         "net-free"};
    config.lengths.resize(13);
    std::iota(config.lengths.begin(), config.lengths.end(), 2);
    config.repetitions = reps;
    config.warmup = std::max(1, reps / 10);
    config.seed = seed;
    config.timer = timer;
    write_csv(run_bench(config), csv_path);
  } else if (suite == "ilp") {
    write_csv(ilp_bench(1000, {1, 2, 3, 4, 5, 6, 7, 8, 9}, reps, seed), csv_path);
  } else if (suite == "cutoff") {
    std::vector<int> cutoffs;
    for (int m = 2; m <= 14; ++m) cutoffs.push_back(m);
    const std::vector<BaseCase> bases{BaseCase::InsertionSort, BaseCase::UnrolledInsertion,
                                      BaseCase::NetworkBranching, BaseCase::NetworkBranchFree};
    write_csv(cutoff_sweep(10000, cutoffs, bases, reps, seed, timer), csv_path);
  } else {
    std::cerr << "unknown suite '" << suite << "'\n";
    return 1;
  }
  std::cout << "wrote " << csv_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sorting-network toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "construct a network and print its text form");
  std::string gen_kind = "best";
  int gen_n = 5;
  std::string gen_objective = "size";
  std::size_t gen_total = 1000;
  int gen_m = 4;
  gen->add_option("--kind", gen_kind, "insertion|bubble|best|fallback|blocks");
  gen->add_option("-n", gen_n, "channel count");
  gen->add_option("--objective", gen_objective, "size|depth (for --kind best)");
  gen->add_option("--total", gen_total, "comparator count (for --kind blocks)");
  gen->add_option("--m", gen_m, "block width (for --kind blocks)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "tabulate expected comparison/swap costs");
  int an_max_n = 100;
  std::string an_model = "classic";
  std::string an_costs = "both";
  std::string an_csv;
  analyze->add_option("--max-n", an_max_n, "largest n");
  analyze->add_option("--model", an_model, "classic|hybrid");
  analyze->add_option("--costs", an_costs, "comparisons|swaps|both");
  analyze->add_option("--csv", an_csv, "output file (stdout when absent)");

  // emit
  auto* emit = app.add_subcommand("emit", "synthesize fixed-length sorter source");
  int em_n = 5;
  std::string em_style = "cmov";
  std::string em_target = "c";
  std::string em_network;
  emit->add_option("-n", em_n, "channel count (catalog network)");
  emit->add_option("--style", em_style, "if|cmov|xor|minmax");
  emit->add_option("--target", em_target, "c|pseudo");
  emit->add_option("--network", em_network, "network file instead of the catalog");

  // sort
  auto* sort_cmd = app.add_subcommand("sort", "sort seeded random keys and report counters");
  std::string so_algo = "qsort-hybrid";
  int so_m = 14;
  std::string so_base = "net-free";
  int so_len = 1000;
  std::uint64_t so_seed = 1;
  bool so_stats = false;
  sort_cmd->add_option("--algo", so_algo, "qsort-hybrid|insertion|selection|bubble|shell");
  sort_cmd->add_option("--m", so_m, "base-case cutoff");
  sort_cmd->add_option("--base", so_base, "none|insertion|ins-unrolled|net-branch|net-free");
  sort_cmd->add_option("--len", so_len, "input length");
  sort_cmd->add_option("--seed", so_seed, "input seed");
  sort_cmd->add_flag("--stats", so_stats, "print counters");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "run a measurement suite and write CSV");
  std::string be_suite = "small-n";
  int be_reps = 10000;
  std::uint64_t be_seed = 1;
  std::string be_csv = "bench.csv";
  std::string be_timer = "ns";
  bench_cmd->add_option("--suite", be_suite, "small-n|ilp|cutoff");
  bench_cmd->add_option("--reps", be_reps, "timed repetitions per point");
  bench_cmd->add_option("--seed", be_seed, "input seed");
  bench_cmd->add_option("--csv", be_csv, "output file");
  bench_cmd->add_option("--timer", be_timer, "ns|cycles");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return run_gen(gen_kind, gen_n, gen_objective, gen_total, gen_m);
    if (analyze->parsed()) return run_analyze(an_max_n, an_model, an_costs, an_csv);
    if (emit->parsed()) return run_emit(em_n, em_style, em_target, em_network);
    if (sort_cmd->parsed()) return run_sort(so_algo, so_m, so_base, so_len, so_seed, so_stats);
    if (bench_cmd->parsed()) return run_bench_cmd(be_suite, be_reps, be_seed, be_csv, be_timer);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
