// SPDX-License-Identifier: Apache-2.0
#include "snlib/codegen.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include "snlib/generators.hpp"

namespace snlib {

namespace {

// One comparator block. Temporaries are numbered per block so blocks stay
// independent statements.
std::string comparator_block(ComparatorStyle style, int x, int y, int k) {
  const std::string ax = "a[" + std::to_string(x) + "]";
  const std::string ay = "a[" + std::to_string(y) + "]";
  const std::string t = "t" + std::to_string(k);
  const std::string c = "c" + std::to_string(k);
  const std::string d = "d" + std::to_string(k);
  switch (style) {
    case ComparatorStyle::BranchingIf:
      return "{ if (" + ay + " < " + ax + ") { int64_t " + t + " = " + ax + "; " + ax + " = " +
             ay + "; " + ay + " = " + t + "; } }";
    case ComparatorStyle::CondMove:
      return "{ int64_t " + t + " = " + ax + "; int " + c + " = " + ay + " < " + t + "; " + ax +
             " = " + c + " ? " + ay + " : " + ax + "; " + ay + " = " + c + " ? " + t + " : " +
             ay + "; }";
    case ComparatorStyle::XorSwap:
      return "{ int64_t " + t + " = " + ax + "; int " + c + " = " + ay + " < " + t + "; " + ax +
             " = " + c + " ? " + ay + " : " + ax + "; " + ay + " ^= " + t + " ^ " + ax + "; }";
    case ComparatorStyle::MinMax:
      return "{ int64_t " + d + " = (" + ax + " ^ " + ay + ") & -(int64_t)(" + ay + " < " + ax +
             "); " + ax + " ^= " + d + "; " + ay + " ^= " + d + "; }";
  }
  throw std::logic_error("unknown comparator style");
}

}  // namespace

std::string emit_sorter(const LayeredNetwork& net, ComparatorStyle style, EmitTarget target,
                        std::string_view name) {
  if (!is_sorting_network(net))
    throw std::invalid_argument("refusing to emit a sorter from a non-sorting network");

  std::ostringstream out;
  if (target == EmitTarget::Pseudocode) {
    out << "sorter " << name << " on " << net.channels() << " channels\n";
    for (const auto& layer : net.layers()) {
      out << "layer:";
      for (Comparator c : layer) out << " compare-exchange(" << c.lo << "," << c.hi << ")";
      out << "\n";
    }
    return out.str();
  }

  out << "static inline void " << name << "(int64_t *a) {\n";
  int k = 0;
  for (const auto& layer : net.layers()) {
    out << "  ";
    bool first = true;
    for (Comparator c : layer) {
      if (!first) out << ' ';
      out << comparator_block(style, c.lo, c.hi, k++);
      first = false;
    }
    out << "\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

constexpr const char* kSwapMacro =
    "#define SWAP(x, y) { int64_t tmp = a[x]; a[x] = a[y]; a[y] = tmp; }\n";
constexpr const char* kCompMacro = "#define COMP(x, y) { if (a[y] < a[x]) SWAP(x, y) }\n";

void check_staged_range(int n) {
  if (n < 2 || n > 16)
    throw std::invalid_argument("staged insertion emission supports 2..16 inputs");
}

}  // namespace

std::string emit_staged_insertion(int n, InsertionStage stage) {
  check_staged_range(n);
  std::ostringstream out;
  const std::string base = "sort" + std::to_string(n);

  switch (stage) {
    case InsertionStage::Loops:
      out << kSwapMacro;
      out << "static inline void " << base << "(int64_t *a) {\n";
      out << "  for (int i = 1; i < " << n << "; i++)\n";
      out << "    for (int j = i; j > 0 && a[j] < a[j-1]; j--)\n";
      out << "      SWAP(j-1, j)\n";
      out << "}\n";
      out << "#undef SWAP\n";
      return out.str();

    case InsertionStage::OuterUnrolled:
      out << kSwapMacro;
      out << "static inline void " << base << "_unrolled(int64_t *a) {\n";
      for (int i = 1; i < n; ++i) {
        out << "  for (int j = " << i << "; j > 0 && a[j] < a[j-1]; j--)\n";
        out << "    SWAP(j-1, j)\n";
      }
      out << "}\n";
      out << "#undef SWAP\n";
      return out.str();

    case InsertionStage::Oblivious:
      out << kSwapMacro;
      out << "static inline void " << base << "_oblivious(int64_t *a) {\n";
      for (int i = 1; i < n; ++i) {
        out << "  for (int j = " << i << "; j > 0; j--)\n";
        out << "    if (a[j] < a[j-1]) SWAP(j-1, j)\n";
      }
      out << "}\n";
      out << "#undef SWAP\n";
      return out.str();

    case InsertionStage::FullyUnrolled: {
      out << kSwapMacro << kCompMacro;
      out << "static inline void " << base << "_network(int64_t *a) {\n";
      // one row per insertion iteration, matching the unrolled loop order
      for (int i = 1; i < n; ++i) {
        out << " ";
        for (int j = i; j > 0; --j) out << " COMP(" << (j - 1) << ", " << j << ")";
        out << "\n";
      }
      out << "}\n";
      out << "#undef COMP\n#undef SWAP\n";
      return out.str();
    }

    case InsertionStage::Layered: {
      out << kSwapMacro << kCompMacro;
      out << "static inline void " << base << "_network_layered(int64_t *a) {\n";
      const LayeredNetwork layered = to_layers(insertion_network(n));
      for (const auto& layer : layered.layers()) {
        out << " ";
        for (Comparator c : layer) out << " COMP(" << c.lo << ", " << c.hi << ")";
        out << "\n";
      }
      out << "}\n";
      out << "#undef COMP\n#undef SWAP\n";
      return out.str();
    }
  }
  throw std::logic_error("unknown insertion stage");
}

}  // namespace snlib
