#include "hyperfect/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace hyperfect {
namespace {

constexpr std::uint64_t kLeafLimit = 5'000'000;

using Coloring = std::vector<int>;

int class_count(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

/// Equitable-style refinement: a vertex's new color is the rank of
/// (old color, sorted multiset of the color patterns of its edges).
Coloring refine(const std::vector<VertexSet>& edges, const std::vector<std::vector<int>>& incident, Coloring colors) {
  const int n = static_cast<int>(colors.size());
  int classes = class_count(colors);
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::vector<int>> patterns;
      patterns.reserve(incident[v].size());
      for (int e : incident[v]) {
        std::vector<int> pat;
        for (VertexSet s = edges[e] & ~singleton(v); s; s &= s - 1) pat.push_back(colors[lowest(s)]);
        std::sort(pat.begin(), pat.end());
        patterns.push_back(std::move(pat));
      }
      std::sort(patterns.begin(), patterns.end());
      std::vector<int> flat{colors[v]};
      for (const auto& p : patterns) {
        flat.push_back(-1);
        flat.insert(flat.end(), p.begin(), p.end());
      }
      sig[v] = {std::move(flat), v};
    }
    std::vector<std::vector<int>> distinct;
    distinct.reserve(n);
    for (const auto& s : sig) distinct.push_back(s.first);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Coloring next(n);
    for (int v = 0; v < n; ++v) {
      next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v].first) - distinct.begin());
    }
    const int next_classes = static_cast<int>(distinct.size());
    colors = std::move(next);
    if (next_classes == classes) return colors;
    classes = next_classes;
  }
}

struct Search {
  const KHypergraph& g;
  std::vector<VertexSet> edges;
  std::vector<std::vector<int>> incident;
  bool have_best = false;
  KHypergraph::Bits best;
  std::vector<int> best_perm;
  std::uint64_t leaves = 0;

  explicit Search(const KHypergraph& h) : g(h), edges(h.edges()), incident(h.n()) {
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      for (VertexSet s = edges[e]; s; s &= s - 1) incident[lowest(s)].push_back(e);
    }
  }

  void leaf(const Coloring& perm) {
    if (++leaves > kLeafLimit) throw std::length_error("canonical_form: search too large");
    KHypergraph::Bits bits(g.bits().size(), 0);
    for (VertexSet e : edges) {
      VertexSet image = 0;
      for (VertexSet s = e; s; s &= s - 1) image |= singleton(perm[lowest(s)]);
      const auto r = colex_rank(image);
      bits[r >> 6] |= std::uint64_t{1} << (r & 63);
    }
    if (!have_best || bits < best) {
      have_best = true;
      best = std::move(bits);
      best_perm = perm;
    }
  }

  void descend(const Coloring& colors) {
    const int n = g.n();
    if (class_count(colors) == n) {
      leaf(colors);
      return;
    }
    std::vector<int> size(n, 0);
    for (int c : colors) ++size[c];
    int target = 0;
    while (size[target] <= 1) ++target;
    for (int v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      Coloring split(n);
      for (int u = 0; u < n; ++u) split[u] = 2 * colors[u] + (u == v ? 0 : 1);
      // Compact to ranks while preserving order.
      std::vector<int> used(split);
      std::sort(used.begin(), used.end());
      used.erase(std::unique(used.begin(), used.end()), used.end());
      for (int& c : split) c = static_cast<int>(std::lower_bound(used.begin(), used.end(), c) - used.begin());
      descend(refine(edges, incident, std::move(split)));
    }
  }
};

}  // namespace

std::string CanonicalForm::id() const {
  std::string out = "k" + std::to_string(k) + "n" + std::to_string(n) + ":";
  if (bits.empty()) return out + "0";
  char buf[17];
  bool leading = true;
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
    if (leading) {
      std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(*it));
      leading = false;
    } else {
      std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(*it));
    }
    out += buf;
  }
  return out;
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& c) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ (static_cast<std::uint64_t>(c.k) << 32) ^ static_cast<std::uint64_t>(c.n);
  for (auto w : c.bits) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

CanonicalLabeling canonical_labeling(const KHypergraph& g) {
  const int n = g.n();
  std::vector<int> identity(n);
  for (int v = 0; v < n; ++v) identity[v] = v;
  if (g.is_empty() || g.is_complete()) return {CanonicalForm{g.k(), n, g.bits()}, identity};

  Search search(g);
  const auto deg = degrees(g);
  std::vector<int> distinct(deg);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Coloring colors(n);
  for (int v = 0; v < n; ++v) colors[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), deg[v]) - distinct.begin());
  search.descend(refine(search.edges, search.incident, std::move(colors)));
  return {CanonicalForm{g.k(), n, std::move(search.best)}, std::move(search.best_perm)};
}

CanonicalForm canonical_form(const KHypergraph& g) { return canonical_labeling(g).form; }

bool are_isomorphic(const KHypergraph& a, const KHypergraph& b) {
  if (a.k() != b.k() || a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace hyperfect
