#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hyperfect/graph.hpp"
#include "hyperfect/hypergraph.hpp"
#include "hyperfect/parallel.hpp"

namespace hyperfect {

/// (k+1)-uniform on n+1 vertices; the apex is vertex n.
KHypergraph cone(const KHypergraph& h);

/// The r-cliques of g as an r-uniform hypergraph on V(g). Requires r > k.
KHypergraph clique_hypergraph(const KHypergraph& g, int r);

/// Parts A, B, C of sizes ceil-balanced and laid out consecutively; edges
/// abc, aa'b, bb'c, cc'a.
KHypergraph turan_construction(int n);

std::int64_t tripartite_max_edges(int n);
/// All triples meeting each of three balanced consecutive parts once.
KHypergraph complete_tripartite(int n);

bool is_intersecting(const KHypergraph& g);

enum class IntersectingKind { kA, kB, kC, kLinkTriangle, kLinkStar };

IntersectingKind parse_intersecting_kind(std::string_view name);
std::string_view to_string(IntersectingKind kind);

/// a: K_5^3 (n = 5). b: all triples with two of {0,1,2}. c: a cone over a
/// balanced complete bipartite graph on n-1 vertices. link_triangle /
/// link_star: all triples of {0,1,2,3}, and every other vertex linked to the
/// triangle on {0,1,2} or the star at 0 inside {0,1,2,3}.
KHypergraph intersecting_example(IntersectingKind kind, int n);

/// Predicate names: k4_free, intersecting, clique_friendly, h_perfect,
/// h_omega, h_alpha, berge, c_omega, c_alpha, doubly.
bool satisfies(const KHypergraph& g, std::string_view predicate);
const std::vector<std::string>& extremal_predicates();

struct ExtremalResult {
  int max_edges = -1;
  std::vector<KHypergraph> extremal;
  std::size_t examined = 0;
  std::size_t satisfying = 0;
};

/// Maximum edge count over all iso classes of 3-graphs on n vertices that
/// satisfy every predicate, with all extremal instances in enumeration order.
ExtremalResult extremal_search(int n, const std::vector<std::string>& predicates, int jobs = default_jobs());

}  // namespace hyperfect
