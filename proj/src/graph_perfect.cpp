#include "hyperfect/graph_perfect.hpp"

#include <stdexcept>
#include <string>

namespace hyperfect {

std::string_view to_string(PerfectMethod m) {
  switch (m) {
    case PerfectMethod::kColoring:
      return "coloring";
    case PerfectMethod::kAlphaOmega:
      return "alpha_omega";
    case PerfectMethod::kHoleScan:
      break;
  }
  return "hole_scan";
}

PerfectMethod parse_perfect_method(std::string_view name) {
  if (name == "coloring") return PerfectMethod::kColoring;
  if (name == "alpha_omega") return PerfectMethod::kAlphaOmega;
  if (name == "hole_scan") return PerfectMethod::kHoleScan;
  throw std::invalid_argument("unknown perfectness method: " + std::string(name));
}

std::optional<StructureWitness> find_odd_hole_or_antihole(const Graph& g) {
  if (auto hole = find_odd_hole(g)) return StructureWitness{"odd_hole", *hole, -1};
  if (auto anti = find_odd_hole(complement(g))) return StructureWitness{"odd_antihole", *anti, -1};
  return std::nullopt;
}

Certificate is_graph_perfect(const Graph& g, PerfectMethod method) {
  switch (method) {
    case PerfectMethod::kColoring:
      for (VertexSet s : subsets_by_size(g.vertices())) {
        const Graph h = induced(g, s);
        const int omega = clique_number(h);
        const int chi = chromatic_number(h);
        if (chi != omega) return Certificate::no(SubsetWitness{s, 0, omega, "chromatic number exceeds clique number"}, {{"chi", chi}, {"omega", omega}});
      }
      return Certificate::yes();
    case PerfectMethod::kAlphaOmega: {
      const Graph co = complement(g);
      for (VertexSet s : subsets_by_size(g.vertices())) {
        const int omega = clique_number(g, s);
        const int alpha = clique_number(co, s);
        if (alpha * omega < size_of(s)) {
          return Certificate::no(SubsetWitness{s, 0, omega, "alpha * omega < |V|"}, {{"alpha", alpha}, {"omega", omega}, {"size", size_of(s)}});
        }
      }
      return Certificate::yes();
    }
    case PerfectMethod::kHoleScan:
      break;
  }
  if (auto w = find_odd_hole_or_antihole(g)) return Certificate::no(*w);
  return Certificate::yes();
}

}  // namespace hyperfect
