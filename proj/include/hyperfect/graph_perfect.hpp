#pragma once

#include <string_view>

#include "hyperfect/certificate.hpp"
#include "hyperfect/graph.hpp"

namespace hyperfect {

/// Independent graph-perfectness certifiers. They must always agree.
enum class PerfectMethod {
  kColoring,     ///< chi(H) = omega(H) on every induced subgraph
  kAlphaOmega,   ///< alpha(H) * omega(H) >= |V(H)| on every induced subgraph
  kHoleScan,     ///< no odd hole in G or its complement
};

std::string_view to_string(PerfectMethod m);
PerfectMethod parse_perfect_method(std::string_view name);

Certificate is_graph_perfect(const Graph& g, PerfectMethod method = PerfectMethod::kHoleScan);

/// Odd hole in G, else odd hole in the complement (an odd antihole of G).
std::optional<StructureWitness> find_odd_hole_or_antihole(const Graph& g);

}  // namespace hyperfect
