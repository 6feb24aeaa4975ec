#pragma once

#include <map>
#include <optional>

#include "hyperfect/certificate.hpp"
#include "hyperfect/hypergraph.hpp"
#include "hyperfect/tuple_coloring.hpp"

namespace hyperfect {

/// No edge F has all of its (k-1)-subsets equal-colored.
/// Throws std::invalid_argument when c.arity() != k-1 or c.n() != n.
bool is_proper(const KHypergraph& g, const TupleColoring& c);

/// The coloring Z -> c(X u Z) of (k-1-|X|)-subsets of V \ X is proper for
/// link(g, X). Requires |X| < k-1.
bool restricts_properly(const KHypergraph& g, VertexSet x, const TupleColoring& c);

/// Exhaustive backtracking for a t-coloring that is proper and restricts
/// properly to link(g, X). Tuples containing X are assigned first, then the
/// rest, each block in colex order; new colors are opened in order. An empty
/// result is a proof that no such coloring exists.
std::optional<TupleColoring> search_coloring(const KHypergraph& g, VertexSet x, int t);

/// omega(g) - k + 2: the color budget in the C_omega / Berge conditions.
int coloring_budget(const KHypergraph& g);

/// Glues per-(k-2)-set colorings into one: c(Z) = c_Y(Z) where Y is the
/// (k-2)-initial segment of Z in vertex order. X must be an initial segment
/// {0, ..., |X|-1} with |X| <= k-2. Each supplied c_Y must be proper and
/// restrict properly to link(g, Y); violations throw std::invalid_argument.
TupleColoring compose_berge_coloring(const KHypergraph& g, VertexSet x, const std::map<VertexSet, TupleColoring>& per_y);

/// Berge: for every induced G' and every |X| = k-2, a proper
/// (omega(G')-k+2)-coloring restricting properly to the link exists.
Certificate is_berge(const KHypergraph& g);

/// C_omega-perfect: the same for every |X| < k-1.
Certificate is_c_omega_perfect(const KHypergraph& g);
/// C_alpha-perfect: the complement is C_omega-perfect.
Certificate is_c_alpha_perfect(const KHypergraph& g);
/// Doubly perfect: C_omega- and C_alpha-perfect.
Certificate is_doubly_perfect(const KHypergraph& g);

/// Drops all memoized local verdicts (used by tests and benchmarks).
void clear_coloring_cache();
std::size_t coloring_cache_size();

/// Serialization: one line per tuple, `v1 ... v_arity color`, colex order.
std::string format_coloring(const TupleColoring& c);

}  // namespace hyperfect
