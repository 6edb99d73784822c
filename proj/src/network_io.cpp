// SPDX-License-Identifier: Apache-2.0
#include "snlib/network_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace snlib {

namespace {

bool blank_or_comment(std::string_view line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (ch != ' ' && ch != '\t' && ch != '\r') return false;
  }
  return true;
}

int parse_int(std::string_view tok, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

LayeredNetwork parse_network(std::string_view text) {
  if (!text.empty() && text.back() != '\n')
    throw ParseError(1 + static_cast<int>(std::count(text.begin(), text.end(), '\n')),
                     "missing trailing newline");

  int channels = -1;
  std::vector<std::vector<Comparator>> layers;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    if (blank_or_comment(line)) continue;

    auto toks = split_ws(line);
    if (channels < 0) {
      if (toks.size() != 2 || toks[0] != "channels")
        throw ParseError(lineno, "expected 'channels <n>'");
      channels = parse_int(toks[1], lineno);
      if (channels < 1) throw ParseError(lineno, "channel count must be positive");
      continue;
    }

    std::vector<Comparator> layer;
    std::vector<char> used(static_cast<std::size_t>(channels));
    for (auto tok : toks) {
      const std::size_t colon = tok.find(':');
      if (colon == std::string_view::npos || colon == 0 || colon + 1 == tok.size())
        throw ParseError(lineno, "expected '<lo>:<hi>', got '" + std::string(tok) + "'");
      const int lo = parse_int(tok.substr(0, colon), lineno);
      const int hi = parse_int(tok.substr(colon + 1), lineno);
      if (lo < 0 || hi >= channels)
        throw ParseError(lineno, "channel index out of range in '" + std::string(tok) + "'");
      if (lo >= hi) throw ParseError(lineno, "comparator needs lo < hi in '" + std::string(tok) + "'");
      if (used[static_cast<std::size_t>(lo)] || used[static_cast<std::size_t>(hi)])
        throw ParseError(lineno, "channel repeated within layer in '" + std::string(tok) + "'");
      used[static_cast<std::size_t>(lo)] = used[static_cast<std::size_t>(hi)] = 1;
      layer.push_back({lo, hi});
    }
    layers.push_back(std::move(layer));
  }
  if (channels < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'channels <n>' header");
  return {channels, std::move(layers)};
}

std::string format_network(const LayeredNetwork& net) {
  std::ostringstream out;
  out << "channels " << net.channels() << "\n";
  for (const auto& layer : net.layers()) {
    bool first = true;
    for (Comparator c : layer) {
      if (!first) out << ' ';
      out << c.lo << ':' << c.hi;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace snlib
