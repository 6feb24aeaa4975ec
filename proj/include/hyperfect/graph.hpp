#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperfect/hypergraph.hpp"

namespace hyperfect {

/// A simple graph: a 2-uniform KHypergraph with cached neighborhood masks.
class Graph {
 public:
  Graph() : Graph(0) {}
  explicit Graph(int n);
  /// Throws std::invalid_argument unless h.k() == 2.
  explicit Graph(KHypergraph h);
  /// Symmetric, loop-free neighborhood masks.
  static Graph from_adjacency(std::vector<VertexSet> adjacency);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return h_.n(); }
  VertexSet vertices() const { return h_.vertices(); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return contains(adj_[u], v); }
  int degree(int v) const { return size_of(adj_[v]); }
  std::size_t edge_count() const { return h_.edge_count(); }
  const std::vector<VertexSet>& adjacency() const { return adj_; }
  const KHypergraph& hypergraph() const { return h_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.h_ == b.h_; }

 private:
  KHypergraph h_;
  std::vector<VertexSet> adj_;
};

Graph complement(const Graph& g);
Graph induced(const Graph& g, VertexSet subset);

/// Clique / independence numbers restricted to `within` (whole graph by default).
int clique_number(const Graph& g);
int clique_number(const Graph& g, VertexSet within);
int independence_number(const Graph& g);
int independence_number(const Graph& g, VertexSet within);

/// Proper vertex coloring with at most t colors, or nullopt if none exists.
/// Exhaustive DSATUR backtracking, so nullopt is a refutation.
std::optional<std::vector<int>> find_vertex_coloring(const Graph& g, int t);

/// Exact chromatic number: clique lower bound, DSATUR upper bound, then
/// exhaustive refutation of every smaller color count.
int chromatic_number(const Graph& g);

bool is_triangle_free(const Graph& g);
bool is_bipartite(const Graph& g);
/// True when G[subset] is a single chordless cycle through every vertex of subset.
bool is_induced_cycle(const Graph& g, VertexSet subset);

/// Shortest induced odd cycle of length >= 5, as a cyclic vertex sequence.
/// Returns nullopt when the graph has no odd hole.
std::optional<std::vector<int>> find_odd_hole(const Graph& g);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();
/// Mycielski construction: triangle-free preserving, raises chi by one.
Graph mycielskian(const Graph& g);
/// The Mycielskian of C_5 (11 vertices, chromatic number 4).
Graph grotzsch_graph();

}  // namespace hyperfect
