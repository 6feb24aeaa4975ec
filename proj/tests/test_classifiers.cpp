#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hyperfect/classifiers.hpp"
#include "hyperfect/cocycles.hpp"
#include "hyperfect/coloring.hpp"
#include "hyperfect/enumerate.hpp"
#include "hyperfect/extremal.hpp"
#include "hyperfect/graph_perfect.hpp"
#include "hyperfect/report.hpp"
#include "test_support.hpp"

using namespace hyperfect;

namespace {

// Oracle: smallest c such that some map V -> [0, c) has independent classes.
int min_cover_by_brute_force(const KHypergraph& g) {
  const int n = g.n();
  if (n == 0) return 0;
  for (int c = 1; c <= n; ++c) {
    std::vector<int> cls(n, 0);
    for (;;) {
      bool ok = true;
      for (VertexSet e : g.edges()) {
        const int first = cls[lowest(e)];
        bool same = true;
        for (int v : members(e)) same = same && cls[v] == first;
        if (same) {
          ok = false;
          break;
        }
      }
      if (ok) return c;
      int i = 0;
      while (i < n && ++cls[i] == c) cls[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

// Oracle: max number of distinct colors over all maps V -> [0, n) with no
// rainbow edge.
int upper_chromatic_by_brute_force(const KHypergraph& g) {
  const int n = g.n();
  std::vector<int> col(n, 0);
  int best = 0;
  for (;;) {
    bool ok = true;
    for (VertexSet e : g.edges()) {
      std::set<int> seen;
      for (int v : members(e)) seen.insert(col[v]);
      if (static_cast<int>(seen.size()) == g.k()) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, static_cast<int>(std::set<int>(col.begin(), col.end()).size()));
    int i = 0;
    while (i < n && ++col[i] == n) col[i++] = 0;
    if (i == n) break;
  }
  return best;
}

KHypergraph three_edges_on_four() { return KHypergraph::from_edges(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}); }

}  // namespace

TEST(CliqueFriendly, Examples) {
  EXPECT_TRUE(is_clique_friendly(KHypergraph::complete(3, 4)).holds());
  auto c = is_clique_friendly(three_edges_on_four());
  ASSERT_TRUE(c.fails());
  EXPECT_EQ(std::get<SubsetWitness>(c.witness).subset, full_set(4));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) EXPECT_TRUE(is_clique_friendly(testing_support::random_hypergraph(rng, 2, 7, 0.5)).holds());
}

TEST(CliqueFriendly, CocyclesAndTheirComplements) {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& h : enumerate_graphs(n)) {
      const auto c = co(Graph(h));
      EXPECT_TRUE(is_clique_friendly(c).holds());
      EXPECT_TRUE(is_clique_friendly(complement(c)).holds());
    }
  }
}

TEST(CliqueFriendly, ImpliedByCOmega) {
  for (int n = 4; n <= 5; ++n) {
    for (const auto& g : enumerate_iso(3, n)) {
      if (is_c_omega_perfect(g).holds()) EXPECT_TRUE(is_clique_friendly(g).holds());
    }
  }
}

TEST(HPerfect, GraphCaseAndConstructions) {
  for (const auto& h : enumerate_graphs(6)) EXPECT_EQ(is_h_perfect(h).holds(), is_graph_perfect(Graph(h)).holds());
  EXPECT_TRUE(is_h_perfect(cone(cycle_graph(6).hypergraph())).holds());
  EXPECT_TRUE(is_h_perfect(cone(petersen_graph().hypergraph())).fails());
  EXPECT_TRUE(is_h_perfect(turan_construction(6)).holds());
  auto c = is_h_perfect(cone(cycle_graph(5).hypergraph()));
  ASSERT_TRUE(c.fails());
  EXPECT_EQ(std::get<SubsetWitness>(c.witness).fixed, singleton(5));
}

TEST(Classify, CompleteHypergraphIsPerfectEverywhere) {
  const auto r = classify(KHypergraph::complete(3, 5));
  for (const char* name : {"clique_friendly", "berge", "c_omega", "c_alpha", "doubly", "h_perfect", "h_omega", "h_alpha", "pc", "cocycle"}) {
    EXPECT_TRUE(r.at(name).holds()) << name;
  }
  const auto j = to_json(r);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["classes"]["berge"]["verdict"], true);
}

TEST(Classify, TripartiteAndSimpleAreHOmegaPerfect) {
  EXPECT_TRUE(classify(complete_tripartite(6)).at("h_omega").holds());
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    // Greedy random simple 3-graph: pairwise edge intersections <= 1.
    const int n = 5 + trial % 4;
    EdgeSetBuilder b(3, n);
    std::vector<VertexSet> chosen;
    for (int attempt = 0; attempt < 20; ++attempt) {
      VertexSet e = 0;
      while (size_of(e) < 3) e |= singleton(static_cast<int>(rng() % n));
      bool ok = true;
      for (VertexSet f : chosen) ok = ok && size_of(e & f) <= 1;
      if (ok) {
        chosen.push_back(e);
        b.add(e);
      }
    }
    EXPECT_TRUE(is_h_omega_perfect(b.build()).holds());
  }
}

TEST(Classify, ImplicationsHoldOnSmallCorpus) {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& g : enumerate_iso(3, n)) EXPECT_NO_THROW(classify(g));
  }
  auto r = classify(three_edges_on_four());
  EXPECT_TRUE(r.at("clique_friendly").fails());
  EXPECT_TRUE(r.at("cocycle").fails());
}

TEST(Ramsey, ClosedFormsAndBruteForce) {
  EXPECT_EQ(ramsey_number(4, 2), 5);
  EXPECT_EQ(ramsey_number(1, 3), 3);
  EXPECT_EQ(ramsey_number(2, 3), 6);
  EXPECT_FALSE(ramsey_number(3, 3));
  EXPECT_EQ(RamseyTable::standard().lookup(2, 3)->provenance, RamseyProvenance::kBruteForced);
  const RamseyTable with_external(true);
  EXPECT_EQ(with_external.value(3, 3), 17);
  EXPECT_EQ(with_external.lookup(3, 3)->provenance, RamseyProvenance::kExternal);
  EXPECT_THROW(RamseyTable::standard().require(4, 3), RamseyUnknown);
  for (int s = 1; s <= 6; ++s) {
    EXPECT_TRUE(ramsey_scan(s, 2, s).witness);
    EXPECT_TRUE(ramsey_scan(s, 2, s + 1).forced);
  }
}

TEST(Ramsey, TwoColorTrianglesByDirectEnumeration) {
  // Oracle: edge colorings of K_n as bitmasks over an explicit pair list.
  auto has_free_coloring = [](int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int b = 1; b < n; ++b) {
      for (int a = 0; a < b; ++a) pairs.emplace_back(a, b);
    }
    auto idx = [&](int a, int b) {
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i] == std::pair{std::min(a, b), std::max(a, b)}) return static_cast<int>(i);
      }
      return -1;
    };
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      bool mono = false;
      for (int a = 0; a < n && !mono; ++a) {
        for (int b = a + 1; b < n && !mono; ++b) {
          for (int c = b + 1; c < n && !mono; ++c) {
            const int x = (mask >> idx(a, b)) & 1, y = (mask >> idx(a, c)) & 1, z = (mask >> idx(b, c)) & 1;
            mono = x == y && y == z;
          }
        }
      }
      if (!mono) return true;
    }
    return false;
  };
  EXPECT_TRUE(has_free_coloring(5));
  EXPECT_FALSE(has_free_coloring(6));
  const auto five = ramsey_scan(2, 3, 5);
  ASSERT_TRUE(five.witness);
  EXPECT_FALSE(has_monochromatic_clique(*five.witness, 3));
  const auto six = ramsey_scan(2, 3, 6);
  EXPECT_TRUE(six.forced);
  EXPECT_EQ(six.colorings_checked, 1u << 15);
}

TEST(RPerfect, GraphCaseIsAlphaOmegaBound) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& h : enumerate_graphs(n)) {
      EXPECT_EQ(is_r_perfect(h).holds(), is_graph_perfect(Graph(h), PerfectMethod::kAlphaOmega).holds());
    }
  }
  auto c5 = is_r_perfect(cycle_graph(5).hypergraph());
  ASSERT_TRUE(c5.fails());
  EXPECT_EQ(c5.detail["s"], 4);
  EXPECT_EQ(c5.detail["ramsey"], 5);
}

TEST(RPerfect, UnknownIndexIsIndeterminate) {
  bool seen = false;
  for (const auto& h : enumerate_graphs(5)) {
    const auto c = co(Graph(h));
    if (independence_number(c) != 3 || clique_number(c) != 3 || !is_doubly_perfect(c).holds()) continue;
    const auto cert = is_r_perfect(c);
    EXPECT_TRUE(cert.indeterminate());
    seen = true;
  }
  EXPECT_TRUE(seen);
}

TEST(PcProperty, ExamplesAndRamseyBound) {
  EXPECT_TRUE(has_pc_property(cycle_graph(6).hypergraph()).holds());
  EXPECT_TRUE(has_pc_property(cycle_graph(5).hypergraph()).fails());
  for (int n = 3; n <= 5; ++n) {
    for (const auto& g : enumerate_iso(3, n)) {
      const auto cert = has_pc_property(g);
      if (!cert.holds()) continue;
      const auto& c = std::get<TupleColoring>(cert.witness);
      EXPECT_FALSE(has_monochromatic_clique(c, 3));
      const int s = (independence_number(g) - 1) * (clique_number(g) - 1);
      EXPECT_EQ(c.num_colors(), s);
      if (auto r = ramsey_number(s, 3)) EXPECT_LT(n, *r);
    }
  }
}

TEST(MinIndependentCover, ExamplesAndBruteForce) {
  EXPECT_EQ(min_independent_cover(KHypergraph(3, 6))->size, 1);
  for (int k = 2; k <= 4; ++k) {
    for (int n = k; n <= 8; ++n) EXPECT_EQ(min_independent_cover(KHypergraph::complete(k, n))->size, (n + k - 2) / (k - 1));
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testing_support::random_hypergraph(rng, 2 + trial % 2, 2 + static_cast<int>(rng() % 5), 0.6);
    const auto cover = min_independent_cover(g);
    ASSERT_TRUE(cover);
    EXPECT_EQ(cover->size, min_cover_by_brute_force(g));
    VertexSet all = 0;
    for (VertexSet c : cover->classes) {
      EXPECT_TRUE(is_independent(g, c));
      all |= c;
    }
    EXPECT_EQ(all, g.vertices());
  }
  EXPECT_FALSE(min_independent_cover(petersen_graph().hypergraph(), 2));
}

TEST(HdProperty, Examples) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 2 + trial % 2;
    EXPECT_TRUE(has_hd_property(testing_support::random_hypergraph(rng, k, 6, 0.5), k).holds());
  }
  for (const auto& h : enumerate_graphs(6)) {
    if (is_graph_perfect(Graph(h)).holds()) EXPECT_TRUE(has_hd_property(h, 1).holds());
  }
  auto c5 = has_hd_property(cycle_graph(5).hypergraph(), 1);
  ASSERT_TRUE(c5.fails());
  EXPECT_EQ(c5.detail["p"], 3);
  EXPECT_EQ(c5.detail["q"], 2);
  // Oracle for the first failure: (2,2) is vacuous since some pair is a non-edge,
  // every 3-set of C_5 contains an edge, and no 2 cliques cover 5 vertices.
  EXPECT_EQ(min_cover_by_brute_force(complement(cycle_graph(5).hypergraph())), 3);
  EXPECT_TRUE(has_hd_property(cycle_graph(5).hypergraph(), 1, 0).indeterminate());
}

TEST(ChiBoundCover, DoublyPerfectThreeGraphs) {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& h : enumerate_graphs(n)) {
      const auto c = co(Graph(h));
      if (!is_doubly_perfect(c).holds()) continue;
      const auto cover = min_independent_cover(c);
      ASSERT_TRUE(cover);
      EXPECT_LE(cover->size, clique_number(c) - 1);
      EXPECT_TRUE(chi_bound_cover(c).holds());
    }
  }
}

TEST(Voloshin, Examples) {
  EXPECT_EQ(voloshin_upper_chromatic(KHypergraph(3, 5)), 5);
  EXPECT_EQ(voloshin_upper_chromatic(complete_graph(3).hypergraph()), 1);
  const auto p3 = path_graph(3).hypergraph();
  EXPECT_EQ(voloshin_upper_chromatic(p3), 1);
  EXPECT_EQ(independence_number(p3), 2);
  EXPECT_TRUE(is_voloshin_perfect(p3).fails());
  EXPECT_TRUE(is_voloshin_perfect(complete_graph(4).hypergraph()).holds());
}

TEST(Voloshin, UpperChromaticMatchesBruteForceAndIsAtMostAlpha) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = testing_support::random_hypergraph(rng, 2 + trial % 2, 1 + static_cast<int>(rng() % 6), 0.5);
    const int chi_bar = voloshin_upper_chromatic(g);
    EXPECT_EQ(chi_bar, upper_chromatic_by_brute_force(g));
    EXPECT_LE(chi_bar, independence_number(g));
  }
}
