#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "hyperfect/hypergraph.hpp"

namespace hyperfect {

/// Raised on malformed .khg input; carries the 1-based line number.
struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what) : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

/// `.khg` text format: a `k n` header, then one edge per line as k
/// increasing 0-based vertex indices. Blank lines and `#` lines are skipped.
KHypergraph parse_khg(std::istream& in);
KHypergraph parse_khg(const std::string& text);
KHypergraph read_khg_file(const std::string& path);

/// Header plus edges in colex order, LF line endings.
std::string serialize_khg(const KHypergraph& g);

}  // namespace hyperfect
