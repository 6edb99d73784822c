// SPDX-License-Identifier: Apache-2.0
#include "snlib/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#if defined(__x86_64__) || defined(_M_X64)
#include <x86intrin.h>
#define SNLIB_HAVE_RDTSC 1
#endif

#include "snlib/codegen.hpp"
#include "snlib/generators.hpp"
#include "snlib/rng.hpp"

namespace snlib {

namespace {

inline std::uint64_t now_ns() {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now().time_since_epoch())
          .count());
}

inline std::uint64_t now_cycles() {
#ifdef SNLIB_HAVE_RDTSC
  return __rdtsc();
#else
  throw std::runtime_error("cycle counter not available on this platform");
#endif
}

std::uint64_t read_timer(TimerKind kind) {
  return kind == TimerKind::MonotonicNs ? now_ns() : now_cycles();
}

const char* timer_unit(TimerKind kind) {
  return kind == TimerKind::MonotonicNs ? "ns" : "cycles";
}

struct MeanStddev {
  double mean;
  double stddev;
};

MeanStddev summarize(const std::vector<double>& xs) {
  if (xs.empty()) return {0.0, 0.0};
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  var /= static_cast<double>(xs.size());
  return {mean, std::sqrt(var)};
}

std::vector<Key> random_keys(std::size_t len, SplitMix64& rng) {
  std::vector<Key> keys(len);
  for (auto& k : keys) k = static_cast<Key>(rng.next());
  return keys;
}

void check_output(const std::vector<Key>& out, Key want_sum, Key want_xor,
                  const std::string& algorithm, int n) {
  if (!std::is_sorted(out.begin(), out.end()))
    throw std::runtime_error("benchmark output not sorted: " + algorithm + " at n=" +
                             std::to_string(n));
  Key sum = 0;
  Key x = 0;
  for (Key k : out) {
    sum += k;
    x ^= k;
  }
  if (sum != want_sum || x != want_xor)
    throw std::runtime_error("benchmark output lost keys: " + algorithm + " at n=" +
                             std::to_string(n));
}

using SortRunner = std::function<void(std::span<Key>, std::uint64_t seed)>;

SortRunner fixed_length_runner(std::span<const gen::SortFn, 17> table, const std::string& id) {
  return [table, id](std::span<Key> data, std::uint64_t) {
    if (data.size() < 2 || data.size() > 16)
      throw std::invalid_argument(id + " supports lengths 2..16");
    table[data.size()](data.data());
  };
}

// Synthesized insertion-network sorters (unlayered and layered guarded-swap
// forms) live here rather than in the generated tables: they are only
// benchmark subjects, not quicksort base cases.
template <bool Layered>
void insertion_network_sort(std::span<Key> data) {
  static const auto lists = [] {
    std::array<std::vector<Comparator>, 17> out;
    for (int n = 2; n <= 16; ++n) {
      auto net = insertion_network(n);
      out[static_cast<std::size_t>(n)] =
          Layered ? flatten(to_layers(net)).comparators() : net.comparators();
    }
    return out;
  }();
  for (Comparator c : lists[data.size()])
    if (data[static_cast<std::size_t>(c.hi)] < data[static_cast<std::size_t>(c.lo)])
      std::swap(data[static_cast<std::size_t>(c.lo)], data[static_cast<std::size_t>(c.hi)]);
}

SortRunner resolve_algorithm(const std::string& id) {
  if (id == "insertion")
    return [](std::span<Key> d, std::uint64_t) { reference_sort(ReferenceAlgo::Insertion, d); };
  if (id == "selection")
    return [](std::span<Key> d, std::uint64_t) { reference_sort(ReferenceAlgo::Selection, d); };
  if (id == "bubble")
    return [](std::span<Key> d, std::uint64_t) { reference_sort(ReferenceAlgo::Bubble, d); };
  if (id == "shell")
    return [](std::span<Key> d, std::uint64_t) { reference_sort(ReferenceAlgo::Shell, d); };
  if (id == "quicksort")
    return [](std::span<Key> d, std::uint64_t seed) {
      quicksort_hybrid(d, 0, BaseCase::None, seed);
    };
  if (id == "ins-unrolled") return fixed_length_runner(gen::unrolled_insertion_sorters(), id);
  if (id == "net-best-if") return fixed_length_runner(gen::network_branching_sorters(), id);
  if (id == "net-free") return fixed_length_runner(gen::network_branchfree_sorters(), id);
  if (id == "net-ins-if")
    return [](std::span<Key> d, std::uint64_t) { insertion_network_sort<false>(d); };
  if (id == "net-ins-layered-if")
    return [](std::span<Key> d, std::uint64_t) { insertion_network_sort<true>(d); };
  throw std::invalid_argument("unknown algorithm '" + id + "'");
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
  if (config.lengths.empty()) throw std::invalid_argument("no input lengths configured");
  std::vector<std::pair<std::string, SortRunner>> runners;
  for (const auto& id : config.algorithms) runners.emplace_back(id, resolve_algorithm(id));

  std::vector<BenchRecord> records;
  for (const auto& [id, run] : runners) {
    for (int n : config.lengths) {
      // input pool keyed by (seed, n) only: identical across algorithms
      SplitMix64 gen(mix_seed(config.seed, static_cast<std::uint64_t>(n)));
      const std::size_t pool_size =
          std::min<std::size_t>(static_cast<std::size_t>(config.repetitions) +
                                    static_cast<std::size_t>(config.warmup),
                                4096);
      std::vector<std::vector<Key>> pool(pool_size);
      std::vector<Key> sums(pool_size), xors(pool_size);
      for (std::size_t p = 0; p < pool_size; ++p) {
        pool[p] = random_keys(static_cast<std::size_t>(n), gen);
        Key s = 0, x = 0;
        for (Key k : pool[p]) {
          s += k;
          x ^= k;
        }
        sums[p] = s;
        xors[p] = x;
      }

      std::vector<Key> work;
      std::vector<double> samples;
      samples.reserve(static_cast<std::size_t>(config.repetitions));
      const int total = config.warmup + config.repetitions;
      for (int rep = 0; rep < total; ++rep) {
        const std::size_t p = static_cast<std::size_t>(rep) % pool_size;
        work = pool[p];
        const std::uint64_t sort_seed = mix_seed(config.seed, 0x5157u + static_cast<std::uint64_t>(rep));
        const std::uint64_t t0 = read_timer(config.timer);
        run(work, sort_seed);
        const std::uint64_t t1 = read_timer(config.timer);
        check_output(work, sums[p], xors[p], id, n);
        if (rep >= config.warmup) samples.push_back(static_cast<double>(t1 - t0));
      }
      const auto [mean, stddev] = summarize(samples);
      records.push_back({id, n, mean, stddev, config.repetitions, timer_unit(config.timer)});
    }
  }
  std::sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
    return a.algorithm != b.algorithm ? a.algorithm < b.algorithm : a.n < b.n;
  });
  return records;
}

std::vector<BenchRecord> ilp_bench(std::size_t total, const std::vector<int>& m_values,
                                   int repetitions, std::uint64_t seed) {
  if (total < 1) throw std::invalid_argument("network size must be at least 1");
  if (m_values.empty()) throw std::invalid_argument("no block widths configured");
  if (repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");

  std::vector<BenchRecord> records;
  volatile Key sink = 0;  // keeps the timed loop observable
  for (int m : m_values) {
    const auto net = parallel_blocks_network(total, m);
    const auto& comps = net.comparators();
    SplitMix64 gen(mix_seed(seed, static_cast<std::uint64_t>(m)));
    std::vector<std::vector<Key>> pool(64);
    for (auto& p : pool) p = random_keys(static_cast<std::size_t>(net.channels()), gen);

    std::vector<Key> work;
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(repetitions));
    const int warmup = std::max(1, repetitions / 10);
    for (int rep = 0; rep < warmup + repetitions; ++rep) {
      work = pool[static_cast<std::size_t>(rep) % pool.size()];
      Key* a = work.data();
      asm volatile("" : : "g"(a) : "memory");  // pin the buffer inside the timed region
      const std::uint64_t t0 = now_ns();
      for (Comparator c : comps) conditional_swap(a[c.lo], a[c.hi]);
      asm volatile("" : : "g"(a) : "memory");
      const std::uint64_t t1 = now_ns();
      sink = sink ^ a[0];
      if (rep >= warmup) samples.push_back(static_cast<double>(t1 - t0));
    }
    const auto [mean, stddev] = summarize(samples);
    records.push_back({"parallel-blocks", m, mean, stddev, repetitions, "ns"});
  }
  return records;
}

const char* base_case_name(BaseCase base) {
  switch (base) {
    case BaseCase::None:
      return "none";
    case BaseCase::InsertionSort:
      return "insertion";
    case BaseCase::UnrolledInsertion:
      return "ins-unrolled";
    case BaseCase::NetworkBranching:
      return "net-branch";
    case BaseCase::NetworkBranchFree:
      return "net-free";
  }
  return "?";
}

std::vector<CutoffRecord> cutoff_sweep(int total_length, const std::vector<int>& cutoffs,
                                       const std::vector<BaseCase>& bases, int repetitions,
                                       std::uint64_t seed, TimerKind timer) {
  if (total_length < 1) throw std::invalid_argument("total length must be positive");
  if (repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
  for (int m : cutoffs)
    if (m < 2 || m > 16) throw std::invalid_argument("cutoffs must lie in 2..16");

  // shared input pool, independent of base case and cutoff
  SplitMix64 gen(mix_seed(seed, static_cast<std::uint64_t>(total_length)));
  const std::size_t pool_size = 64;
  std::vector<std::vector<Key>> pool(pool_size);
  std::vector<Key> sums(pool_size), xors(pool_size);
  for (std::size_t p = 0; p < pool_size; ++p) {
    pool[p] = random_keys(static_cast<std::size_t>(total_length), gen);
    Key s = 0, x = 0;
    for (Key k : pool[p]) {
      s += k;
      x ^= k;
    }
    sums[p] = s;
    xors[p] = x;
  }

  std::vector<CutoffRecord> records;
  for (BaseCase base : bases) {
    const std::size_t first = records.size();
    for (int m : cutoffs) {
      std::vector<Key> work;
      std::vector<double> samples;
      samples.reserve(static_cast<std::size_t>(repetitions));
      const int warmup = std::max(1, repetitions / 10);
      for (int rep = 0; rep < warmup + repetitions; ++rep) {
        const std::size_t p = static_cast<std::size_t>(rep) % pool_size;
        work = pool[p];
        const std::uint64_t sort_seed = mix_seed(seed, 0x5157u + static_cast<std::uint64_t>(rep));
        const std::uint64_t t0 = read_timer(timer);
        quicksort_hybrid(work, m, base, sort_seed);
        const std::uint64_t t1 = read_timer(timer);
        check_output(work, sums[p], xors[p], base_case_name(base), total_length);
        if (rep >= warmup) samples.push_back(static_cast<double>(t1 - t0));
      }
      const auto [mean, stddev] = summarize(samples);
      records.push_back({base_case_name(base), m, mean, stddev, repetitions,
                         timer_unit(timer), 0.0});
    }
    // reductions against the smallest cutoff of this base (cutoff 2 in the
    // standard sweep: the base case that never fires)
    double baseline = 0.0;
    int baseline_cutoff = cutoffs.empty() ? 0 : *std::min_element(cutoffs.begin(), cutoffs.end());
    for (std::size_t i = first; i < records.size(); ++i)
      if (records[i].cutoff == baseline_cutoff) baseline = records[i].mean;
    for (std::size_t i = first; i < records.size(); ++i)
      records[i].reduction_pct =
          baseline > 0.0 ? (baseline - records[i].mean) / baseline * 100.0 : 0.0;
  }
  return records;
}

namespace {

std::string format_double(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

void write_csv(const std::vector<BenchRecord>& records, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "algorithm,n,mean,stddev,repetitions,unit\n";
  auto sorted = records;
  std::sort(sorted.begin(), sorted.end(), [](const BenchRecord& a, const BenchRecord& b) {
    return a.algorithm != b.algorithm ? a.algorithm < b.algorithm : a.n < b.n;
  });
  for (const auto& r : sorted)
    out << r.algorithm << ',' << r.n << ',' << format_double(r.mean) << ','
        << format_double(r.stddev) << ',' << r.repetitions << ',' << r.unit << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_csv(const std::vector<CutoffRecord>& records, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "algorithm,n,mean,stddev,repetitions,unit,reduction_pct\n";
  for (const auto& r : records)
    out << r.base << ',' << r.cutoff << ',' << format_double(r.mean) << ','
        << format_double(r.stddev) << ',' << r.repetitions << ',' << r.unit << ','
        << format_double(r.reduction_pct) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace snlib
