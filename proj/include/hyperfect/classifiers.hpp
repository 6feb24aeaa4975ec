#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperfect/certificate.hpp"
#include "hyperfect/hypergraph.hpp"
#include "hyperfect/parallel.hpp"
#include "hyperfect/ramsey.hpp"

namespace hyperfect {

/// Every (k+1)-set spans either k+1 edges or at most two.
Certificate is_clique_friendly(const KHypergraph& g);

/// Every link of a (k-2)-set is a perfect graph (hole scan certifier).
Certificate is_h_perfect(const KHypergraph& g);
/// H-perfect and clique friendly.
Certificate is_h_omega_perfect(const KHypergraph& g);
/// The complement is H_omega-perfect.
Certificate is_h_alpha_perfect(const KHypergraph& g);

/// |V(G')| < R_{(alpha-k'+2)(omega-k'+2)}(k') for every induced G' and for
/// every link of every X with |X| < k-1 inside every induced G'. A definite
/// violation wins over unknown Ramsey indices; otherwise an unknown index
/// makes the verdict indeterminate.
Certificate is_r_perfect(const KHypergraph& g, const RamseyTable& table = RamseyTable::standard());

/// Proper (omega-k+2)-coloring of G and proper (alpha-k+2)-coloring of the
/// complement. The positive witness is their product coloring, re-verified to
/// contain no monochromatic K_k^{k-1}.
Certificate has_pc_property(const KHypergraph& g);

struct IndependentCover {
  int size = 0;
  std::vector<VertexSet> classes;
};

/// A set is independent when it contains no edge.
bool is_independent(const KHypergraph& g, VertexSet s);

/// Exact minimum cover of V(G) by independent sets. nullopt when the node
/// budget runs out before optimality is proven.
std::optional<IndependentCover> min_independent_cover(const KHypergraph& g, std::uint64_t budget = default_node_budget());

/// Minimum cover by cliques (independent sets of the complement).
std::optional<IndependentCover> min_clique_cover(const KHypergraph& g, std::uint64_t budget = default_node_budget());

/// For every k <= q <= p <= n with p(r-1) < (q-1)r: if every p-set contains a
/// q-clique, then V(G) is covered by p-q+1 cliques.
Certificate has_hd_property(const KHypergraph& g, int r, std::uint64_t budget = default_node_budget());

/// min_independent_cover(G) <= omega(G) - k + 2.
Certificate chi_bound_cover(const KHypergraph& g, std::uint64_t budget = default_node_budget());

/// Maximum number of colors in a vertex coloring with no rainbow edge.
int voloshin_upper_chromatic(const KHypergraph& g);

/// upper chromatic number equals alpha on every induced subhypergraph.
/// Throws std::logic_error if upper chromatic number ever exceeds alpha.
Certificate is_voloshin_perfect(const KHypergraph& g);

}  // namespace hyperfect
