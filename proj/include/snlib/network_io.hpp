// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "snlib/network.hpp"

namespace snlib {

/// Error raised by parse_network, carrying the 1-based offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Network text format:
///   channels <n>
///   <lo>:<hi> <lo>:<hi> ...     one line per layer, 0-based, lo < hi
/// '#' starts a comment line; a trailing newline is required. The canonical
/// form emitted by format_network sorts comparators within a layer by lo.
LayeredNetwork parse_network(std::string_view text);
std::string format_network(const LayeredNetwork& net);

}  // namespace snlib
