// SPDX-License-Identifier: Apache-2.0
//
// Build-time synthesis of the fixed-length base-case sorters: unrolled
// insertion sort plus branching and branch-free code generated from the
// size-objective catalog networks, for lengths 2..16.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "snlib/catalog.hpp"
#include "snlib/codegen.hpp"

namespace {

void emit_table(std::ostream& out, const std::string& table, const std::string& prefix,
                const std::string& suffix) {
  out << "constexpr SortFn " << table << "[17] = {\n    nullptr, nullptr";
  for (int n = 2; n <= snlib::kCatalogMaxChannels; ++n)
    out << ",\n    " << prefix << n << suffix;
  out << "};\n\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: " << argv[0] << " <output.inc>\n";
    return 2;
  }
  std::ofstream out(argv[1]);
  if (!out) {
    std::cerr << "cannot write " << argv[1] << "\n";
    return 1;
  }

  out << "// Generated by snlib-gen-base-cases -- do not edit.\n";
  out << "#include <stdint.h>\n\n";
  out << "namespace snlib::gen_detail {\n\n";

  using snlib::ComparatorStyle;
  using snlib::EmitTarget;
  for (int n = 2; n <= snlib::kCatalogMaxChannels; ++n) {
    const auto& entry = snlib::best_network(n, snlib::Objective::Size);
    out << snlib::emit_staged_insertion(n, snlib::InsertionStage::OuterUnrolled) << "\n";
    out << snlib::emit_sorter(entry.network, ComparatorStyle::BranchingIf, EmitTarget::CSource,
                              "netsort" + std::to_string(n) + "_branching")
        << "\n";
    out << snlib::emit_sorter(entry.network, ComparatorStyle::CondMove, EmitTarget::CSource,
                              "netsort" + std::to_string(n) + "_branchfree")
        << "\n";
  }

  out << "using SortFn = void (*)(int64_t*);\n\n";
  emit_table(out, "kUnrolledInsertion", "sort", "_unrolled");
  emit_table(out, "kNetworkBranching", "netsort", "_branching");
  emit_table(out, "kNetworkBranchFree", "netsort", "_branchfree");
  out << "}  // namespace snlib::gen_detail\n";
  return out.good() ? 0 : 1;
}
