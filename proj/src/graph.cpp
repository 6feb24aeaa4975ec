#include "hyperfect/graph.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace hyperfect {
namespace {

std::vector<VertexSet> adjacency_of(const KHypergraph& h) {
  std::vector<VertexSet> adj(h.n(), 0);
  for (VertexSet e : h.edges()) {
    adj[lowest(e)] |= singleton(highest(e));
    adj[highest(e)] |= singleton(lowest(e));
  }
  return adj;
}

KHypergraph require_graph(KHypergraph h) {
  if (h.k() != 2) throw std::invalid_argument("expected a graph (k = 2), got k = " + std::to_string(h.k()));
  return h;
}

}  // namespace

Graph::Graph(int n) : h_(2, n), adj_(n, 0) {}

Graph::Graph(KHypergraph h) : h_(require_graph(std::move(h))), adj_(adjacency_of(h_)) {}

Graph Graph::from_adjacency(std::vector<VertexSet> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  EdgeSetBuilder builder(2, n);
  for (int v = 0; v < n; ++v) {
    if (contains(adjacency[v], v)) throw std::invalid_argument("graph has a loop");
    if ((adjacency[v] & ~full_set(n)) != 0) throw std::invalid_argument("neighbor out of range");
    for (VertexSet s = adjacency[v]; s; s &= s - 1) {
      const int u = lowest(s);
      if (!contains(adjacency[u], v)) throw std::invalid_argument("adjacency is not symmetric");
      if (u > v) builder.add(singleton(u) | singleton(v));
    }
  }
  return Graph(builder.build());
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  EdgeSetBuilder builder(2, n);
  for (auto [a, b] : edges) {
    if (a == b) throw std::invalid_argument("graph has a loop");
    builder.add({a, b});
  }
  return Graph(builder.build());
}

Graph complement(const Graph& g) { return Graph(complement(g.hypergraph())); }

Graph induced(const Graph& g, VertexSet subset) { return Graph(induced(g.hypergraph(), subset)); }

namespace {

// Branch and bound with greedy-coloring bounds over bitsets.
struct MaxClique {
  const std::vector<VertexSet>& adj;
  int best = 0;

  void expand(int size, VertexSet cand) {
    if (cand == 0) {
      best = std::max(best, size);
      return;
    }
    // Greedy color classes give an upper bound per vertex.
    int order[64];
    int bound[64];
    int count = 0;
    VertexSet uncolored = cand;
    int color = 0;
    while (uncolored) {
      ++color;
      VertexSet available = uncolored;
      while (available) {
        const int v = lowest(available);
        available &= ~singleton(v) & ~adj[v];
        uncolored &= ~singleton(v);
        order[count] = v;
        bound[count] = color;
        ++count;
      }
    }
    for (int i = count - 1; i >= 0; --i) {
      if (size + bound[i] <= best) return;
      const int v = order[i];
      expand(size + 1, cand & adj[v]);
      cand &= ~singleton(v);
    }
  }
};

}  // namespace

int clique_number(const Graph& g, VertexSet within) {
  MaxClique search{g.adjacency()};
  search.expand(0, within & g.vertices());
  return search.best;
}

int clique_number(const Graph& g) { return clique_number(g, g.vertices()); }

int independence_number(const Graph& g, VertexSet within) {
  const Graph c = complement(g);
  return clique_number(c, within);
}

int independence_number(const Graph& g) { return independence_number(g, g.vertices()); }

namespace {

struct Dsatur {
  const Graph& g;
  int limit;
  std::vector<int> color;
  std::vector<std::array<int, 64>> count;
  std::vector<std::uint64_t> forbidden;

  Dsatur(const Graph& graph, int t) : g(graph), limit(t), color(graph.n(), -1), count(graph.n()), forbidden(graph.n(), 0) {
    for (auto& c : count) c.fill(0);
  }

  void assign(int v, int c) {
    color[v] = c;
    for (VertexSet s = g.neighbors(v); s; s &= s - 1) {
      const int u = lowest(s);
      if (count[u][c]++ == 0) forbidden[u] |= std::uint64_t{1} << c;
    }
  }

  void unassign(int v) {
    const int c = color[v];
    color[v] = -1;
    for (VertexSet s = g.neighbors(v); s; s &= s - 1) {
      const int u = lowest(s);
      if (--count[u][c] == 0) forbidden[u] &= ~(std::uint64_t{1} << c);
    }
  }

  int pick() const {
    int best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (int v = 0; v < g.n(); ++v) {
      if (color[v] >= 0) continue;
      const int sat = std::popcount(forbidden[v]);
      int deg = 0;
      for (VertexSet s = g.neighbors(v); s; s &= s - 1) deg += color[lowest(s)] < 0;
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool solve(int used) {
    const int v = pick();
    if (v < 0) return true;
    const int top = std::min(limit - 1, used);
    for (int c = 0; c <= top; ++c) {
      if ((forbidden[v] >> c) & 1U) continue;
      assign(v, c);
      if (solve(std::max(used, c + 1))) return true;
      unassign(v);
    }
    return false;
  }

  int greedy() {
    int used = 0;
    for (int v = pick(); v >= 0; v = pick()) {
      int c = 0;
      while ((forbidden[v] >> c) & 1U) ++c;
      assign(v, c);
      used = std::max(used, c + 1);
    }
    return used;
  }
};

}  // namespace

std::optional<std::vector<int>> find_vertex_coloring(const Graph& g, int t) {
  if (t < 0 || t > 64) throw std::invalid_argument("color count must be in [0, 64]");
  if (g.n() == 0) return std::vector<int>{};
  if (t == 0) return std::nullopt;
  Dsatur search(g, t);
  if (!search.solve(0)) return std::nullopt;
  return search.color;
}

int chromatic_number(const Graph& g) {
  if (g.n() == 0) return 0;
  const int lower = clique_number(g);
  Dsatur greedy(g, 64);
  const int upper = greedy.greedy();
  for (int t = lower; t < upper; ++t) {
    if (find_vertex_coloring(g, t)) return t;
  }
  return upper;
}

bool is_triangle_free(const Graph& g) {
  for (int v = 0; v < g.n(); ++v) {
    for (VertexSet s = g.neighbors(v) & ~full_set(v + 1); s; s &= s - 1) {
      if (g.neighbors(v) & g.neighbors(lowest(s))) return false;
    }
  }
  return true;
}

bool is_bipartite(const Graph& g) { return g.n() == 0 || find_vertex_coloring(g, 2).has_value(); }

bool is_induced_cycle(const Graph& g, VertexSet subset) {
  if (size_of(subset) < 3) return false;
  for (VertexSet s = subset; s; s &= s - 1) {
    if (size_of(g.neighbors(lowest(s)) & subset) != 2) return false;
  }
  // 2-regular: connected iff one component.
  VertexSet seen = singleton(lowest(subset));
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s; s &= s - 1) next |= g.neighbors(lowest(s)) & subset;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == subset;
}

namespace {

struct HoleSearch {
  const Graph& g;
  int length;
  int start;
  std::vector<int> path;

  // `blocked` holds the neighborhoods of interior path vertices.
  bool extend(VertexSet on_path, VertexSet blocked) {
    const int last = path.back();
    const int len = static_cast<int>(path.size());
    VertexSet cand = g.neighbors(last) & ~on_path & ~full_set(start + 1) & ~blocked;
    for (; cand; cand &= cand - 1) {
      const int u = lowest(cand);
      const bool closes = len >= 2 && g.adjacent(u, start);
      if (closes) {
        if (len + 1 == length) {
          path.push_back(u);
          return true;
        }
        continue;
      }
      if (len + 1 >= length) continue;
      path.push_back(u);
      const VertexSet next_blocked = len >= 2 ? blocked | g.neighbors(last) : blocked;
      if (extend(on_path | singleton(u), next_blocked)) return true;
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_odd_hole(const Graph& g) {
  for (int length = 5; length <= g.n(); length += 2) {
    for (int s = 0; s < g.n(); ++s) {
      HoleSearch search{g, length, s, {s}};
      if (search.extend(singleton(s), 0)) return search.path;
    }
  }
  return std::nullopt;
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) { return Graph(KHypergraph::complete(2, n)); }

Graph empty_graph(int n) { return Graph(n); }

Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, edges);
}

Graph mycielskian(const Graph& g) {
  const int n = g.n();
  if (2 * n + 1 > kMaxVertices) throw std::invalid_argument("mycielskian: result exceeds 64 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    for (VertexSet s = g.neighbors(v); s; s &= s - 1) {
      const int u = lowest(s);
      if (u > v) edges.emplace_back(v, u);
      edges.emplace_back(n + v, u);
    }
    edges.emplace_back(n + v, 2 * n);
  }
  return Graph::from_edges(2 * n + 1, edges);
}

Graph grotzsch_graph() { return mycielskian(cycle_graph(5)); }

}  // namespace hyperfect
