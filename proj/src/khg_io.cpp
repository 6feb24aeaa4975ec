#include "hyperfect/khg_io.hpp"

#include <fstream>
#include <sstream>

namespace hyperfect {
namespace {

bool skippable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

std::vector<long long> parse_ints(const std::string& line, int line_no) {
  std::istringstream ss(line);
  std::vector<long long> out;
  std::string token;
  while (ss >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw ParseError(line_no, "expected an integer, got '" + token + "'");
    }
    if (used != token.size()) throw ParseError(line_no, "expected an integer, got '" + token + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace

KHypergraph parse_khg(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int k = 0;
  int n = 0;
  std::vector<VertexSet> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const auto values = parse_ints(line, line_no);
    if (!have_header) {
      if (values.size() != 2) throw ParseError(line_no, "header must be `k n`");
      if (values[0] < 1) throw ParseError(line_no, "k must be positive");
      if (values[1] < 0 || values[1] > kMaxVertices) throw ParseError(line_no, "n must be in [0, 64]");
      k = static_cast<int>(values[0]);
      n = static_cast<int>(values[1]);
      have_header = true;
      continue;
    }
    if (static_cast<int>(values.size()) != k) throw ParseError(line_no, "edge must list exactly " + std::to_string(k) + " vertices");
    VertexSet e = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] < 0 || values[i] >= n) throw ParseError(line_no, "vertex " + std::to_string(values[i]) + " out of range");
      if (i > 0 && values[i] <= values[i - 1]) throw ParseError(line_no, "edge vertices must be strictly increasing");
      e |= singleton(static_cast<int>(values[i]));
    }
    edges.push_back(e);
  }
  if (!have_header) throw ParseError(line_no, "missing `k n` header");
  EdgeSetBuilder builder(k, n);
  for (VertexSet e : edges) {
    if (builder.has(e)) throw ParseError(line_no, "duplicate edge");
    builder.add(e);
  }
  return builder.build();
}

KHypergraph parse_khg(const std::string& text) {
  std::istringstream in(text);
  return parse_khg(in);
}

KHypergraph read_khg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_khg(in);
}

std::string serialize_khg(const KHypergraph& g) {
  std::string out = std::to_string(g.k()) + " " + std::to_string(g.n()) + "\n";
  for (VertexSet e : g.edges()) {
    bool first = true;
    for (int v : members(e)) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

}  // namespace hyperfect
