#include <gtest/gtest.h>

#include <random>

#include "hyperfect/classifiers.hpp"
#include "hyperfect/extremal.hpp"
#include "hyperfect/graph_perfect.hpp"
#include "test_support.hpp"

using namespace hyperfect;

namespace {

Graph random_perfect_graph(std::mt19937_64& rng, int n) {
  for (;;) {
    auto g = testing_support::random_graph(rng, n, std::uniform_real_distribution<>(0.2, 0.8)(rng));
    if (is_graph_perfect(g).holds()) return g;
  }
}

// Oracle: K_4^3 detection by scanning all 4-sets.
bool has_k4(const KHypergraph& g) {
  bool found = false;
  for_each_subset_of_size(g.vertices(), 4, [&](VertexSet s) {
    int count = 0;
    for (VertexSet t = s; t; t &= t - 1) count += g.has_edge(s & ~(t & (~t + 1)));
    found = count == 4;
    return !found;
  });
  return found;
}

int count_spanned(const KHypergraph& g, VertexSet s) {
  int count = 0;
  for_each_subset_of_size(s, g.k(), [&](VertexSet e) { count += g.has_edge(e); });
  return count;
}

}  // namespace

TEST(Cone, Examples) {
  const auto c = cone(complete_graph(3).hypergraph());
  EXPECT_EQ(c.k(), 3);
  EXPECT_EQ(c.n(), 4);
  EXPECT_EQ(c.edge_count(), 3u);
  for (VertexSet e : c.edges()) EXPECT_TRUE(contains(e, 3));
  EXPECT_EQ(cone(KHypergraph(3, 5)), KHypergraph(4, 6));
}

// Cones keep H-perfectness, but a K_{k+1}^k in the base becomes a (k+2)-set
// spanning k+1 edges, so clique friendliness survives only without one.
TEST(Cone, IteratedConesOverPerfectGraphs) {
  EXPECT_TRUE(is_clique_friendly(cone(complete_graph(3).hypergraph())).fails());
  std::mt19937_64 rng(1);
  int sparse = 0;
  for (int trial = 0; trial < 60; ++trial) {
    KHypergraph h = random_perfect_graph(rng, 2 + static_cast<int>(rng() % 4)).hypergraph();
    while (h.k() < 5 && h.n() < 8) {
      bool dense = false;
      for_each_subset_of_size(h.vertices(), h.k() + 1, [&](VertexSet s) { dense = dense || count_spanned(h, s) > 2; });
      h = cone(h);
      EXPECT_TRUE(is_h_perfect(h).holds()) << h.k() << " " << h.n();
      EXPECT_EQ(is_h_omega_perfect(h).holds(), !dense) << h.k() << " " << h.n();
      sparse += !dense;
    }
  }
  EXPECT_GT(sparse, 10);
}

TEST(CliqueHypergraph, Examples) {
  EXPECT_EQ(clique_hypergraph(complete_graph(5).hypergraph(), 3), KHypergraph::complete(3, 5));
  EXPECT_EQ(clique_hypergraph(cycle_graph(5).hypergraph(), 3).edge_count(), 0u);
  EXPECT_THROW(clique_hypergraph(cycle_graph(5).hypergraph(), 2), std::invalid_argument);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_perfect_graph(rng, 3 + static_cast<int>(rng() % 6));
    EXPECT_TRUE(is_h_omega_perfect(clique_hypergraph(g.hypergraph(), 3)).holds());
  }
}

TEST(Turan, SixVertexCountAndCliqueNumber) {
  const auto t = turan_construction(6);
  EXPECT_EQ(t.edge_count(), 14u);
  EXPECT_FALSE(has_k4(t));
  EXPECT_EQ(clique_number(t), 3);
}

TEST(Turan, PropertiesUpToNine) {
  for (int n = 3; n <= 9; ++n) {
    const auto t = turan_construction(n);
    EXPECT_FALSE(has_k4(t)) << n;
    EXPECT_TRUE(is_h_perfect(t).holds()) << n;
    EXPECT_TRUE(is_h_alpha_perfect(t).holds()) << n;
    for_each_subset_of_size(t.vertices(), 4, [&](VertexSet s) { EXPECT_NE(count_spanned(t, s), 1); });
  }
}

TEST(Tripartite, Counts) {
  EXPECT_EQ(tripartite_max_edges(6), 8);
  EXPECT_EQ(tripartite_max_edges(7), 12);
  EXPECT_EQ(tripartite_max_edges(2), 0);
  for (int n = 0; n <= 9; ++n) EXPECT_EQ(static_cast<std::int64_t>(complete_tripartite(n).edge_count()), tripartite_max_edges(n));
  const auto t6 = complete_tripartite(6);
  EXPECT_TRUE(is_h_omega_perfect(t6).holds());
  EXPECT_FALSE(has_k4(t6));
}

TEST(ExtremalSearch, SmallCases) {
  EXPECT_EQ(extremal_search(5, {}).max_edges, 10);
  const auto inter = extremal_search(5, {"intersecting", "h_omega"});
  EXPECT_EQ(inter.max_edges, 10);
  ASSERT_EQ(inter.extremal.size(), 1u);
  EXPECT_TRUE(inter.extremal[0].is_complete());
  const auto turan5 = extremal_search(5, {"h_omega", "k4_free"});
  EXPECT_GE(turan5.max_edges, tripartite_max_edges(5));
  for (const auto& g : turan5.extremal) {
    EXPECT_FALSE(has_k4(g));
    EXPECT_TRUE(is_h_omega_perfect(g).holds());
  }
  EXPECT_THROW(extremal_search(5, {"nonsense"}), std::invalid_argument);
}

TEST(ExtremalSearch, StableAcrossWorkerCounts) {
  const auto a = extremal_search(5, {"h_omega"}, 1);
  const auto b = extremal_search(5, {"h_omega"}, 4);
  EXPECT_EQ(a.max_edges, b.max_edges);
  EXPECT_EQ(a.extremal, b.extremal);
  EXPECT_EQ(a.satisfying, b.satisfying);
}

TEST(Intersecting, Counts) {
  const auto b7 = intersecting_example(IntersectingKind::kB, 7);
  EXPECT_EQ(b7.edge_count(), 13u);
  EXPECT_TRUE(is_intersecting(b7));
  EXPECT_TRUE(is_h_omega_perfect(b7).holds());
  EXPECT_EQ(intersecting_example(IntersectingKind::kLinkTriangle, 7).edge_count(), 13u);
  for (int n = 6; n <= 12; ++n) {
    for (auto kind : {IntersectingKind::kB, IntersectingKind::kLinkTriangle, IntersectingKind::kLinkStar}) {
      const auto g = intersecting_example(kind, n);
      EXPECT_EQ(static_cast<int>(g.edge_count()), 3 * n - 8) << to_string(kind) << n;
      EXPECT_TRUE(is_intersecting(g));
    }
    const auto c = intersecting_example(IntersectingKind::kC, n);
    EXPECT_EQ(static_cast<int>(c.edge_count()), (n - 1) * (n - 1) / 4);
    EXPECT_TRUE(is_intersecting(c));
  }
  EXPECT_EQ(intersecting_example(IntersectingKind::kC, 11).edge_count(), 25u);
  EXPECT_EQ(intersecting_example(IntersectingKind::kB, 11).edge_count(), 25u);
  EXPECT_EQ(intersecting_example(IntersectingKind::kA, 5), KHypergraph::complete(3, 5));
  EXPECT_THROW(intersecting_example(IntersectingKind::kA, 6), std::invalid_argument);
  EXPECT_EQ(parse_intersecting_kind("link_star"), IntersectingKind::kLinkStar);
  EXPECT_FALSE(is_intersecting(KHypergraph::from_edges(3, 6, std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}})));
}

TEST(DisjointUnion, PreservesHOmega) {
  const auto k4 = KHypergraph::complete(3, 4);
  const auto u = disjoint_union(k4, k4);
  EXPECT_EQ(u.n(), 8);
  EXPECT_TRUE(is_h_omega_perfect(u).holds());
  EXPECT_EQ(disjoint_union(k4, KHypergraph(3, 3)).edges(), k4.edges());
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing_support::random_hypergraph(rng, 3, 1 + static_cast<int>(rng() % 5), 0.6);
    const auto b = testing_support::random_hypergraph(rng, 3, 1 + static_cast<int>(rng() % 5), 0.6);
    const auto un = disjoint_union(a, b);
    // Any set of fewer than k vertices counts as a clique.
    EXPECT_EQ(clique_number(un), std::max({clique_number(a), clique_number(b), std::min(un.n(), 2)}));
    if (is_h_omega_perfect(a).holds() && is_h_omega_perfect(b).holds()) EXPECT_TRUE(is_h_omega_perfect(un).holds());
  }
  EXPECT_THROW(disjoint_union(k4, KHypergraph(2, 3)), std::invalid_argument);
}

TEST(Simple, LowIntersectionHypergraphsAreHOmegaPerfect) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 3 + trial % 2;
    const int n = k + 2 + static_cast<int>(rng() % 4);
    EdgeSetBuilder b(k, n);
    std::vector<VertexSet> chosen;
    for (int attempt = 0; attempt < 25; ++attempt) {
      VertexSet e = 0;
      while (size_of(e) < k) e |= singleton(static_cast<int>(rng() % n));
      bool ok = true;
      for (VertexSet f : chosen) ok = ok && size_of(e & f) <= k - 2;
      if (ok) {
        chosen.push_back(e);
        b.add(e);
      }
    }
    EXPECT_TRUE(is_h_omega_perfect(b.build()).holds());
  }
}
