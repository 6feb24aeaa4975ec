#include "hyperfect/extremal.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperfect/classifiers.hpp"
#include "hyperfect/coloring.hpp"
#include "hyperfect/enumerate.hpp"

namespace hyperfect {

KHypergraph cone(const KHypergraph& h) {
  if (h.n() + 1 > kMaxVertices) throw std::invalid_argument("cone: too many vertices");
  EdgeSetBuilder b(h.k() + 1, h.n() + 1);
  for (VertexSet e : h.edges()) b.add(e | singleton(h.n()));
  return b.build();
}

KHypergraph clique_hypergraph(const KHypergraph& g, int r) {
  if (r <= g.k()) throw std::invalid_argument("clique_hypergraph: r must exceed k");
  EdgeSetBuilder b(r, g.n());
  for_each_subset_of_size(g.vertices(), r, [&](VertexSet s) {
    if (is_clique(g, s)) b.add(s);
  });
  return b.build();
}

namespace {

// Balanced consecutive parts, larger parts first.
std::array<VertexSet, 3> balanced_parts(int n) {
  const int a = (n + 2) / 3;
  const int b = (n + 1) / 3;
  return {full_set(a), full_set(a + b) & ~full_set(a), full_set(n) & ~full_set(a + b)};
}

}  // namespace

KHypergraph turan_construction(int n) {
  if (n < 3) throw std::invalid_argument("turan_construction needs n >= 3");
  const auto parts = balanced_parts(n);
  EdgeSetBuilder b(3, n);
  for_each_subset_of_size(full_set(n), 3, [&](VertexSet t) {
    std::array<int, 3> in{};
    for (int i = 0; i < 3; ++i) in[i] = size_of(t & parts[i]);
    bool edge = in[0] == 1 && in[1] == 1 && in[2] == 1;
    for (int i = 0; i < 3; ++i) edge = edge || (in[i] == 2 && in[(i + 1) % 3] == 1);
    if (edge) b.add(t);
  });
  return b.build();
}

std::int64_t tripartite_max_edges(int n) {
  if (n < 0) throw std::invalid_argument("tripartite_max_edges needs n >= 0");
  std::int64_t best = 0;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; a + b <= n; ++b) best = std::max<std::int64_t>(best, std::int64_t{a} * b * (n - a - b));
  }
  return best;
}

KHypergraph complete_tripartite(int n) {
  if (n < 0) throw std::invalid_argument("complete_tripartite needs n >= 0");
  const auto parts = balanced_parts(n);
  EdgeSetBuilder b(3, n);
  for_each_subset_of_size(full_set(n), 3, [&](VertexSet t) {
    if (size_of(t & parts[0]) == 1 && size_of(t & parts[1]) == 1) b.add(t);
  });
  return b.build();
}

bool is_intersecting(const KHypergraph& g) {
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!(edges[i] & edges[j])) return false;
    }
  }
  return true;
}

IntersectingKind parse_intersecting_kind(std::string_view name) {
  if (name == "a") return IntersectingKind::kA;
  if (name == "b") return IntersectingKind::kB;
  if (name == "c") return IntersectingKind::kC;
  if (name == "link_triangle") return IntersectingKind::kLinkTriangle;
  if (name == "link_star") return IntersectingKind::kLinkStar;
  throw std::invalid_argument("unknown intersecting example: " + std::string(name));
}

std::string_view to_string(IntersectingKind kind) {
  switch (kind) {
    case IntersectingKind::kA:
      return "a";
    case IntersectingKind::kB:
      return "b";
    case IntersectingKind::kC:
      return "c";
    case IntersectingKind::kLinkTriangle:
      return "link_triangle";
    case IntersectingKind::kLinkStar:
      break;
  }
  return "link_star";
}

KHypergraph intersecting_example(IntersectingKind kind, int n) {
  switch (kind) {
    case IntersectingKind::kA:
      if (n != 5) throw std::invalid_argument("example a is K_5^3 and needs n = 5");
      return KHypergraph::complete(3, 5);
    case IntersectingKind::kB: {
      if (n < 3) throw std::invalid_argument("example b needs n >= 3");
      EdgeSetBuilder b(3, n);
      for_each_subset_of_size(full_set(n), 3, [&](VertexSet t) {
        if (size_of(t & full_set(3)) >= 2) b.add(t);
      });
      return b.build();
    }
    case IntersectingKind::kC: {
      if (n < 3) throw std::invalid_argument("example c needs n >= 3");
      const int m = n - 1;
      std::vector<std::pair<int, int>> edges;
      for (int x = 0; x < m / 2; ++x) {
        for (int y = m / 2; y < m; ++y) edges.emplace_back(x, y);
      }
      return cone(Graph::from_edges(m, edges).hypergraph());
    }
    case IntersectingKind::kLinkTriangle:
    case IntersectingKind::kLinkStar: {
      if (n < 4) throw std::invalid_argument("link examples need n >= 4");
      EdgeSetBuilder b(3, n);
      for_each_subset_of_size(full_set(4), 3, [&](VertexSet t) { b.add(t); });
      for (int v = 4; v < n; ++v) {
        if (kind == IntersectingKind::kLinkTriangle) {
          for (VertexSet pair : {make_set({0, 1}), make_set({0, 2}), make_set({1, 2})}) b.add(pair | singleton(v));
        } else {
          for (int leaf = 1; leaf < 4; ++leaf) b.add(make_set({0, leaf, v}));
        }
      }
      return b.build();
    }
  }
  throw std::invalid_argument("unknown intersecting example");
}

const std::vector<std::string>& extremal_predicates() {
  static const std::vector<std::string> names{"k4_free", "intersecting", "clique_friendly", "h_perfect", "h_omega",
                                               "h_alpha", "berge", "c_omega", "c_alpha", "doubly"};
  return names;
}

bool satisfies(const KHypergraph& g, std::string_view p) {
  if (p == "k4_free") return clique_number(g) < 4;
  if (p == "intersecting") return is_intersecting(g);
  if (p == "clique_friendly") return is_clique_friendly(g).holds();
  if (p == "h_perfect") return is_h_perfect(g).holds();
  if (p == "h_omega") return is_h_omega_perfect(g).holds();
  if (p == "h_alpha") return is_h_alpha_perfect(g).holds();
  if (p == "berge") return is_berge(g).holds();
  if (p == "c_omega") return is_c_omega_perfect(g).holds();
  if (p == "c_alpha") return is_c_alpha_perfect(g).holds();
  if (p == "doubly") return is_doubly_perfect(g).holds();
  throw std::invalid_argument("unknown predicate: " + std::string(p));
}

ExtremalResult extremal_search(int n, const std::vector<std::string>& predicates, int jobs) {
  for (const auto& p : predicates) {
    if (std::find(extremal_predicates().begin(), extremal_predicates().end(), p) == extremal_predicates().end()) {
      throw std::invalid_argument("unknown predicate: " + p);
    }
  }
  const auto corpus = enumerate_iso(3, n);
  std::vector<char> ok(corpus.size(), 0);
  parallel_for(corpus.size(), jobs, [&](std::size_t i) {
    bool all = true;
    for (const auto& p : predicates) {
      if (!satisfies(corpus[i], p)) {
        all = false;
        break;
      }
    }
    ok[i] = all;
  });
  ExtremalResult result;
  result.examined = corpus.size();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!ok[i]) continue;
    ++result.satisfying;
    const int e = static_cast<int>(corpus[i].edge_count());
    if (e > result.max_edges) {
      result.max_edges = e;
      result.extremal.clear();
    }
    if (e == result.max_edges) result.extremal.push_back(corpus[i]);
  }
  return result;
}

}  // namespace hyperfect
