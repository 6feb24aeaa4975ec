#pragma once

#include <optional>
#include <vector>

#include "hyperfect/certificate.hpp"
#include "hyperfect/graph.hpp"
#include "hyperfect/hypergraph.hpp"

namespace hyperfect {

/// Triples spanning an odd number of edges of g.
KHypergraph co(const Graph& g);

struct CocycleResult {
  /// A graph G with co(G) = H and vertex 0 isolated.
  std::optional<Graph> representative;
  /// A 4-set spanning an odd number of edges.
  std::optional<VertexSet> violation;
  explicit operator bool() const { return representative.has_value(); }
};

/// Requires k = 3.
CocycleResult is_cocycle(const KHypergraph& h);

/// G^+(v) on V \ {v}, vertices relabeled by rank.
Graph link_graph_plus(const Graph& g, int v);

/// Complements every pair with exactly one end in `a`.
Graph seidel_switch(const Graph& g, VertexSet a);

struct PreOddHoleWitness {
  int center = -1;
  /// Sectors P_1..P_m in order, each an ordered path. Odd-numbered sectors
  /// (index 0, 2, ... here) are non-neighbors of the center.
  std::vector<std::vector<int>> sectors;
};

struct GeneratedPreOddHole {
  Graph graph;
  int center = 0;
};

/// Center 0, then the sectors' vertices consecutively in path order.
/// Needs an even number >= 2 of positive sizes with odd total >= 5.
GeneratedPreOddHole generate_pre_odd_hole(const std::vector<int>& sector_sizes);

/// Structural recognition from the sector definition.
std::optional<PreOddHoleWitness> recognize_pre_odd_hole(const Graph& g, int v);
/// (G^c, v) is a pre-odd-hole.
std::optional<PreOddHoleWitness> recognize_pre_odd_antihole(const Graph& g, int v);

/// G^+(v) is an odd hole through all of V \ {v} meeting both N(v) and M(v).
bool spanning_odd_hole_criterion(const Graph& g, int v);

enum class PurityMethod { kStructural, kLinks };

/// Structural: the six centered conditions checked on induced subgraphs.
/// Links: G^+(v) has no odd hole or antihole.
Certificate is_pure_vertex(const Graph& g, int v, PurityMethod method);

/// Both methods on every vertex; throws std::logic_error if they disagree.
Certificate is_pure(const Graph& g);

struct SwitchingCounterexample {
  Graph graph;
  int v = -1;
  KHypergraph cocycle{3, 0};
  bool link_matches = false;
  int omega = 0;
  int chi = 0;
  /// chi(H) > 4.
  bool hypothesis = false;
  /// Outcome of the search for a proper (omega-1)-coloring of the pairs that
  /// restricts to a proper vertex coloring of H.
  Certificate obstruction;
  /// hypothesis holds and the obstruction search failed.
  bool concluded = false;
};

/// H with its (A, V \ A) pairs switched, plus a vertex adjacent to exactly A.
/// Throws std::invalid_argument when H has a triangle.
Graph switching_graph(const Graph& h, VertexSet a);

SwitchingCounterexample switching_counterexample(const Graph& h, VertexSet a);

nlohmann::json to_json(const PreOddHoleWitness& w);

}  // namespace hyperfect
