// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "snlib/sort.hpp"

namespace snlib {

/// MonotonicNs is the portable default. CycleCounter reads the CPU timestamp
/// counter where available and throws std::runtime_error elsewhere.
enum class TimerKind { MonotonicNs, CycleCounter };

/// Algorithm identifiers resolvable by run_bench:
///   insertion, selection, bubble, shell, quicksort,
///   ins-unrolled, net-ins-if, net-ins-layered-if,
///   net-best-if, net-free
/// The synthesized fixed-length entries accept lengths 2..16 only.
struct BenchConfig {
  std::vector<std::string> algorithms;
  std::vector<int> lengths;
  int repetitions = 10000;
  int warmup = 100;
  std::uint64_t seed = 1;
  TimerKind timer = TimerKind::MonotonicNs;
};

struct BenchRecord {
  std::string algorithm;
  int n;  // input length; for the ILP suite this column carries the block width
  double mean;
  double stddev;
  int repetitions;
  std::string unit;  // "ns" or "cycles"
};

/// Times every (algorithm, length) pair on seeded random arrays. Input
/// generation and validation stay outside the timed region; every output is
/// checked sorted-and-same-multiset (std::runtime_error on violation). The
/// input stream depends on (seed, length, repetition) only, so all
/// algorithms see identical inputs.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

/// Times branch-free execution of parallel_blocks_network(total, m) for each
/// block width m (the dependency-distance experiment).
std::vector<BenchRecord> ilp_bench(std::size_t total, const std::vector<int>& m_values,
                                   int repetitions, std::uint64_t seed);

/// One hybrid-quicksort timing per (cutoff, base case), sorting arrays of
/// `total_length` keys. reduction_pct is measured against the cutoff-2
/// record of the same base (the cutoff that never fires).
struct CutoffRecord {
  std::string base;  // "insertion", "ins-unrolled", "net-branch", "net-free"
  int cutoff;
  double mean;
  double stddev;
  int repetitions;
  std::string unit;
  double reduction_pct;
};

std::vector<CutoffRecord> cutoff_sweep(int total_length, const std::vector<int>& cutoffs,
                                       const std::vector<BaseCase>& bases, int repetitions,
                                       std::uint64_t seed,
                                       TimerKind timer = TimerKind::MonotonicNs);

/// CSV with header `algorithm,n,mean,stddev,repetitions,unit`, rows ordered
/// by (algorithm, n).
void write_csv(const std::vector<BenchRecord>& records, const std::filesystem::path& path);

/// Cutoff-sweep CSV: the same six columns (algorithm = base case name,
/// n = cutoff) plus a trailing reduction_pct column.
void write_csv(const std::vector<CutoffRecord>& records, const std::filesystem::path& path);

const char* base_case_name(BaseCase base);

}  // namespace snlib
