#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "hyperfect/coloring.hpp"
#include "hyperfect/enumerate.hpp"
#include "hyperfect/graph.hpp"
#include "hyperfect/graph_perfect.hpp"
#include "test_support.hpp"

using namespace hyperfect;

namespace {

// Oracle: every t-coloring of the pairs of a 3-graph, decoded from an integer.
std::vector<int> decode_pair_coloring(std::uint64_t code, int pairs, int t) {
  std::vector<int> colors(pairs);
  for (int i = 0; i < pairs; ++i) {
    colors[i] = static_cast<int>(code % t);
    code /= t;
  }
  return colors;
}

// Oracle: proper + restricted check written from the definition, pairs indexed
// through an explicit table rather than colex ranks.
bool pair_coloring_ok(const KHypergraph& g, const std::vector<int>& colors, VertexSet x) {
  const int n = g.n();
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  int next = 0;
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < b; ++a) index[a][b] = index[b][a] = next++;
  }
  for (VertexSet e : g.edges()) {
    auto v = members(e);
    const int ab = colors[index[v[0]][v[1]]], ac = colors[index[v[0]][v[2]]], bc = colors[index[v[1]][v[2]]];
    if (ab == ac && ac == bc) return false;
    if (x != 0 && (e & x) == x) {
      const int xv = lowest(x);
      std::vector<int> other;
      for (int u : v) {
        if (u != xv) other.push_back(u);
      }
      if (colors[index[xv][other[0]]] == colors[index[xv][other[1]]]) return false;
    }
  }
  return true;
}

bool exists_by_brute_force(const KHypergraph& g, VertexSet x, int t) {
  const int pairs = static_cast<int>(binomial(g.n(), 2));
  std::uint64_t total = 1;
  for (int i = 0; i < pairs; ++i) total *= t;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (pair_coloring_ok(g, decode_pair_coloring(code, pairs, t), x)) return true;
  }
  return false;
}

KHypergraph random_berge_3graph(std::mt19937_64& rng, int n) {
  for (;;) {
    auto g = testing_support::random_hypergraph(rng, 3, n, std::uniform_real_distribution<>(0.1, 0.9)(rng));
    if (is_berge(g).holds()) return g;
  }
}

}  // namespace

TEST(IsProper, EdgelessAndComplete) {
  const KHypergraph edgeless(3, 5);
  std::mt19937_64 rng(1);
  std::vector<int> colors(10);
  for (auto& c : colors) c = static_cast<int>(rng() % 3);
  EXPECT_TRUE(is_proper(edgeless, TupleColoring(2, 5, 3, colors)));
  EXPECT_FALSE(is_proper(KHypergraph::complete(3, 4), TupleColoring(2, 4, 1)));
  EXPECT_THROW(is_proper(edgeless, TupleColoring(1, 5, 2)), std::invalid_argument);
}

TEST(IsProper, GraphCaseIsVertexColoring) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = testing_support::random_graph(rng, 6, 0.4);
    std::vector<int> colors(6);
    for (auto& c : colors) c = static_cast<int>(rng() % 3);
    bool expected = true;
    for (int u = 0; u < 6; ++u) {
      for (int v = u + 1; v < 6; ++v) {
        if (g.adjacent(u, v) && colors[u] == colors[v]) expected = false;
      }
    }
    EXPECT_EQ(is_proper(g.hypergraph(), TupleColoring(1, 6, 3, colors)), expected);
  }
}

TEST(IsProper, AllTwoColoringsOfK43) {
  const auto k43 = KHypergraph::complete(3, 4);
  for (std::uint64_t code = 0; code < 64; ++code) {
    const auto colors = decode_pair_coloring(code, 6, 2);
    EXPECT_EQ(is_proper(k43, TupleColoring(2, 4, 2, colors)), pair_coloring_ok(k43, colors, 0)) << code;
  }
}

TEST(RestrictsProperly, EmptyXIsProperAndSingletonUnfolds) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testing_support::random_hypergraph(rng, 3, 5, 0.5);
    const auto colors = decode_pair_coloring(rng() % 59049, 10, 3);
    const TupleColoring c(2, 5, 3, colors);
    EXPECT_EQ(restricts_properly(g, 0, c), is_proper(g, c));
    const VertexSet x = singleton(static_cast<int>(rng() % 5));
    EXPECT_EQ(is_proper(g, c) && restricts_properly(g, x, c), pair_coloring_ok(g, colors, x));
  }
  EXPECT_THROW(restricts_properly(KHypergraph(3, 4), make_set({0, 1}), TupleColoring(2, 4, 1)), std::invalid_argument);
}

TEST(SearchColoring, Examples) {
  auto all_zero = search_coloring(KHypergraph(3, 5), singleton(2), 1);
  ASSERT_TRUE(all_zero);
  for (int c : all_zero->colors()) EXPECT_EQ(c, 0);
  const auto c5 = cycle_graph(5).hypergraph();
  EXPECT_FALSE(search_coloring(c5, 0, 2));
  auto three = search_coloring(c5, 0, 3);
  ASSERT_TRUE(three);
  EXPECT_TRUE(is_proper(c5, *three));
  EXPECT_THROW(search_coloring(c5, 0, 0), std::invalid_argument);
}

TEST(SearchColoring, K43MinusEdgeMatchesBruteForce) {
  const auto g = KHypergraph::from_edges(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
  const int t = coloring_budget(g);
  EXPECT_EQ(t, 2);
  for (VertexSet x : {VertexSet{0}, singleton(0), singleton(1), singleton(2), singleton(3)}) {
    EXPECT_EQ(search_coloring(g, x, t).has_value(), exists_by_brute_force(g, x, t)) << x;
  }
}

TEST(SearchColoring, AgreesWithBruteForceOnRandomInstances) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 4 + trial % 2;
    const auto g = testing_support::random_hypergraph(rng, 3, n, 0.6);
    const int t = 1 + static_cast<int>(rng() % 2);
    const VertexSet x = trial % 3 == 0 ? 0 : singleton(static_cast<int>(rng() % n));
    auto found = search_coloring(g, x, t);
    EXPECT_EQ(found.has_value(), exists_by_brute_force(g, x, t));
    if (found) {
      EXPECT_TRUE(is_proper(g, *found));
      if (x) EXPECT_TRUE(restricts_properly(g, x, *found));
    }
  }
}

TEST(Berge, Examples) {
  EXPECT_TRUE(is_berge(cycle_graph(6).hypergraph()).holds());
  EXPECT_TRUE(is_berge(KHypergraph::complete(3, 6)).holds());
  EXPECT_TRUE(is_c_omega_perfect(KHypergraph(4, 6)).holds());
  auto c5 = is_berge(cycle_graph(5).hypergraph());
  ASSERT_TRUE(c5.fails());
  const auto& w = std::get<SubsetWitness>(c5.witness);
  EXPECT_EQ(w.subset, full_set(5));
  EXPECT_EQ(w.fixed, 0u);
  EXPECT_TRUE(is_c_omega_perfect(KHypergraph::from_edges(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}})).fails());
}

TEST(Berge, NegativeWitnessRechecks) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing_support::random_hypergraph(rng, 3, 6, 0.5);
    auto cert = is_c_omega_perfect(g);
    if (!cert.fails()) continue;
    const auto& w = std::get<SubsetWitness>(cert.witness);
    const auto sub = induced(g, w.subset);
    EXPECT_EQ(w.colors, coloring_budget(sub));
    EXPECT_FALSE(search_coloring(sub, compress(w.fixed, w.subset), w.colors));
  }
}

TEST(Berge, EquivalentToCOmegaOnSmallThreeGraphs) {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& g : enumerate_iso(3, n)) EXPECT_EQ(is_berge(g).holds(), is_c_omega_perfect(g).holds());
  }
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = testing_support::random_hypergraph(rng, 4, 6, trial % 2 ? 0.9 : 0.2);
    EXPECT_EQ(is_berge(g).holds(), is_c_omega_perfect(g).holds());
  }
}

TEST(Berge, GraphCaseIsPerfectness) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& h : enumerate_graphs(n)) {
      const Graph g(h);
      const bool hole = is_graph_perfect(g, PerfectMethod::kHoleScan).holds();
      EXPECT_EQ(is_c_omega_perfect(h).holds(), hole);
      EXPECT_EQ(is_graph_perfect(g, PerfectMethod::kColoring).holds(), hole);
      EXPECT_EQ(is_graph_perfect(g, PerfectMethod::kAlphaOmega).holds(), hole);
    }
  }
}

TEST(Berge, CacheIsFilledAndClearable) {
  clear_coloring_cache();
  is_berge(KHypergraph::complete(3, 5));
  EXPECT_GT(coloring_cache_size(), 0u);
  clear_coloring_cache();
  EXPECT_EQ(coloring_cache_size(), 0u);
}

TEST(ComposeBerge, ThreeUniformUnfolds) {
  std::mt19937_64 rng(7);
  const auto g = random_berge_3graph(rng, 5);
  const int t = coloring_budget(g);
  std::map<VertexSet, TupleColoring> per_y;
  for (int v = 0; v < 5; ++v) per_y.emplace(singleton(v), *search_coloring(g, singleton(v), t));
  const auto c = compose_berge_coloring(g, 0, per_y);
  for (int b = 1; b < 5; ++b) {
    for (int a = 0; a < b; ++a) EXPECT_EQ(c.color(make_set({a, b})), per_y.at(singleton(a)).color(make_set({a, b})));
  }
}

TEST(ComposeBerge, OutputIsProperAndRestrictsForEveryFirstVertex) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 4;
    const auto base = random_berge_3graph(rng, n);
    // Put each vertex first in turn so every singleton X is an initial segment.
    for (int first = 0; first < n; ++first) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[0], perm[first]);
      const auto g = relabel(base, perm);
      const int t = coloring_budget(g);
      std::map<VertexSet, TupleColoring> per_y;
      for (int v = 0; v < n; ++v) {
        auto cy = search_coloring(g, singleton(v), t);
        ASSERT_TRUE(cy);
        per_y.emplace(singleton(v), *cy);
      }
      const auto c = compose_berge_coloring(g, singleton(0), per_y);
      EXPECT_TRUE(is_proper(g, c));
      EXPECT_TRUE(restricts_properly(g, 0, c));
      EXPECT_TRUE(restricts_properly(g, singleton(0), c));
      EXPECT_LE(c.num_colors(), t);
    }
  }
}

TEST(ComposeBerge, RejectsBadInput) {
  const auto g = KHypergraph::complete(3, 4);
  std::map<VertexSet, TupleColoring> per_y;
  EXPECT_THROW(compose_berge_coloring(g, 0, per_y), std::invalid_argument);
  for (int v = 0; v < 4; ++v) per_y.emplace(singleton(v), TupleColoring(2, 4, 1));
  EXPECT_THROW(compose_berge_coloring(g, 0, per_y), std::invalid_argument);
  EXPECT_THROW(compose_berge_coloring(g, singleton(2), per_y), std::invalid_argument);
}

TEST(GraphColoring, ChromaticNumbers) {
  EXPECT_EQ(chromatic_number(cycle_graph(5)), 3);
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(chromatic_number(complete_graph(n)), n);
  EXPECT_EQ(chromatic_number(petersen_graph()), 3);
  const auto gr = grotzsch_graph();
  EXPECT_EQ(gr.n(), 11);
  EXPECT_TRUE(is_triangle_free(gr));
  EXPECT_FALSE(find_vertex_coloring(gr, 3));
  EXPECT_EQ(chromatic_number(gr), 4);
}

TEST(GraphColoring, ChromaticNumberMatchesBruteForce) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const auto g = testing_support::random_graph(rng, n, 0.5);
    // Oracle: smallest t such that some assignment in [0,t)^n is proper.
    int expected = n;
    for (int t = 1; t < n && expected == n; ++t) {
      std::vector<int> col(n, 0);
      for (;;) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
          for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v) && col[u] == col[v]) {
              ok = false;
              break;
            }
          }
        }
        if (ok) {
          expected = t;
          break;
        }
        int i = 0;
        while (i < n && ++col[i] == t) col[i++] = 0;
        if (i == n) break;
      }
    }
    EXPECT_EQ(chromatic_number(g), expected);
  }
}

TEST(GraphPerfect, Witnesses) {
  const auto c5 = cycle_graph(5);
  auto hole = is_graph_perfect(c5, PerfectMethod::kHoleScan);
  ASSERT_TRUE(hole.fails());
  const auto& sw = std::get<StructureWitness>(hole.witness);
  EXPECT_EQ(sw.kind, "odd_hole");
  EXPECT_EQ(sw.sequence.size(), 5u);
  EXPECT_TRUE(is_induced_cycle(c5, make_set(sw.sequence)));
  auto ao = is_graph_perfect(c5, PerfectMethod::kAlphaOmega);
  ASSERT_TRUE(ao.fails());
  EXPECT_EQ(ao.detail["alpha"], 2);
  EXPECT_EQ(ao.detail["omega"], 2);
  EXPECT_TRUE(is_graph_perfect(cycle_graph(7)).fails());
  EXPECT_TRUE(is_graph_perfect(complement(cycle_graph(7))).fails());
  EXPECT_TRUE(is_graph_perfect(cycle_graph(8)).holds());
  EXPECT_EQ(parse_perfect_method("alpha_omega"), PerfectMethod::kAlphaOmega);
  EXPECT_THROW(parse_perfect_method("x"), std::invalid_argument);
}

TEST(GraphPerfect, BipartiteGraphsArePerfect) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const VertexSet side = rng() & full_set(n);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (contains(side, u) != contains(side, v) && rng() % 2) edges.emplace_back(u, v);
      }
    }
    const auto g = Graph::from_edges(n, edges);
    EXPECT_TRUE(is_bipartite(g));
    EXPECT_TRUE(is_graph_perfect(g).holds());
  }
}
