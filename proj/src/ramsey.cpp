#include "hyperfect/ramsey.hpp"

#include <vector>

#include "hyperfect/combinatorics.hpp"

namespace hyperfect {

std::string_view to_string(RamseyProvenance p) {
  switch (p) {
    case RamseyProvenance::kClosedForm:
      return "closed_form";
    case RamseyProvenance::kBruteForced:
      return "brute_forced";
    case RamseyProvenance::kExternal:
      return "external";
    case RamseyProvenance::kUnknown:
      break;
  }
  return "unknown";
}

RamseyUnknown::RamseyUnknown(int s, int k)
    : std::runtime_error("R_" + std::to_string(s) + "(" + std::to_string(k) + ") is unknown"), s_(s), k_(k) {}

namespace {

// For each k-subset of [n], the colex ranks of its (k-1)-subsets.
std::vector<std::vector<std::uint64_t>> clique_faces(int k, int n) {
  std::vector<std::vector<std::uint64_t>> faces;
  for_each_subset_of_size(full_set(n), k, [&](VertexSet f) {
    std::vector<std::uint64_t> ranks;
    for (VertexSet s = f; s; s &= s - 1) ranks.push_back(colex_rank(f & ~(s & (~s + 1))));
    faces.push_back(std::move(ranks));
  });
  return faces;
}

bool mono(const std::vector<std::vector<std::uint64_t>>& faces, const std::vector<int>& color) {
  for (const auto& f : faces) {
    bool same = true;
    for (auto r : f) {
      if (color[r] != color[f.front()]) {
        same = false;
        break;
      }
    }
    if (same) return true;
  }
  return false;
}

}  // namespace

bool has_monochromatic_clique(const TupleColoring& c, int k) {
  if (c.arity() != k - 1) throw std::invalid_argument("coloring arity must be k-1");
  return mono(clique_faces(k, c.n()), c.colors());
}

RamseyScan ramsey_scan(int s, int k, int n) {
  if (s < 1 || k < 2 || n < 0) throw std::invalid_argument("ramsey_scan: need s >= 1, k >= 2, n >= 0");
  const auto faces = clique_faces(k, n);
  const std::uint64_t tuples = binomial(n, k - 1);
  RamseyScan scan;
  std::vector<int> color(tuples, 0);
  for (;;) {
    ++scan.colorings_checked;
    if (!mono(faces, color)) {
      scan.witness = TupleColoring(k - 1, n, s, color);
      return scan;
    }
    std::uint64_t i = 0;
    while (i < tuples && ++color[i] == s) color[i++] = 0;
    if (i == tuples) break;
  }
  scan.forced = true;
  return scan;
}

std::optional<int> brute_force_ramsey(int s, int k, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    if (ramsey_scan(s, k, n).forced) return n;
  }
  return std::nullopt;
}

RamseyTable::RamseyTable(bool allow_external) {
  for (int s : {1, 2}) {
    if (auto v = brute_force_ramsey(s, 3, 7)) entries_[{s, 3}] = {*v, RamseyProvenance::kBruteForced, *v};
  }
  if (allow_external) entries_[{3, 3}] = {17, RamseyProvenance::kExternal, 0};
}

std::optional<RamseyEntry> RamseyTable::lookup(int s, int k) const {
  if (s < 1 || k < 2) throw std::invalid_argument("R_s(k) needs s >= 1, k >= 2");
  if (auto it = entries_.find({s, k}); it != entries_.end()) return it->second;
  if (k == 2) return RamseyEntry{s + 1, RamseyProvenance::kClosedForm, 0};
  if (s == 1) return RamseyEntry{k, RamseyProvenance::kClosedForm, 0};
  return std::nullopt;
}

std::optional<int> RamseyTable::value(int s, int k) const {
  if (auto e = lookup(s, k)) return e->value;
  return std::nullopt;
}

int RamseyTable::require(int s, int k) const {
  if (auto v = value(s, k)) return *v;
  throw RamseyUnknown(s, k);
}

const RamseyTable& RamseyTable::standard() {
  static const RamseyTable table(false);
  return table;
}

std::optional<int> ramsey_number(int s, int k) { return RamseyTable::standard().value(s, k); }

}  // namespace hyperfect
