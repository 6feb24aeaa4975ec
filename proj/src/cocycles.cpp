#include "hyperfect/cocycles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hyperfect/coloring.hpp"
#include "hyperfect/graph_perfect.hpp"

namespace hyperfect {

KHypergraph co(const Graph& g) {
  EdgeSetBuilder b(3, g.n());
  for_each_subset_of_size(g.vertices(), 3, [&](VertexSet t) {
    int count = 0;
    for (VertexSet s = t; s; s &= s - 1) count += size_of(g.neighbors(lowest(s)) & t);
    if ((count / 2) % 2 == 1) b.add(t);
  });
  return b.build();
}

CocycleResult is_cocycle(const KHypergraph& h) {
  if (h.k() != 3) throw std::invalid_argument("is_cocycle needs a 3-uniform hypergraph");
  CocycleResult result;
  for_each_subset_of_size(h.vertices(), 4, [&](VertexSet f) {
    int count = 0;
    for (VertexSet s = f; s; s &= s - 1) count += h.has_edge(f & ~(s & (~s + 1)));
    if (count % 2 == 1) result.violation = f;
    return !result.violation;
  });
  if (result.violation) return result;
  std::vector<std::pair<int, int>> edges;
  for (int b = 2; b < h.n(); ++b) {
    for (int a = 1; a < b; ++a) {
      if (h.has_edge(make_set({0, a, b}))) edges.emplace_back(a, b);
    }
  }
  Graph g = Graph::from_edges(h.n(), edges);
  if (co(g) != h) throw std::logic_error("cocycle representative does not reproduce the hypergraph");
  result.representative = std::move(g);
  return result;
}

Graph link_graph_plus(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) throw std::out_of_range("link_graph_plus: vertex out of range");
  const VertexSet rest = g.vertices() & ~singleton(v);
  const VertexSet nbr = g.neighbors(v);
  std::vector<std::pair<int, int>> edges;
  for (VertexSet s = rest; s; s &= s - 1) {
    const int x = lowest(s);
    for (VertexSet t = rest & ~full_set(x + 1); t; t &= t - 1) {
      const int y = lowest(t);
      const bool same_side = contains(nbr, x) == contains(nbr, y);
      if (same_side == g.adjacent(x, y)) edges.emplace_back(size_of(rest & full_set(x)), size_of(rest & full_set(y)));
    }
  }
  return Graph::from_edges(g.n() - 1, edges);
}

Graph seidel_switch(const Graph& g, VertexSet a) {
  if (a & ~g.vertices()) throw std::out_of_range("seidel_switch: set outside the vertex range");
  std::vector<VertexSet> adj = g.adjacency();
  const VertexSet b = g.vertices() & ~a;
  for (int v = 0; v < g.n(); ++v) adj[v] ^= contains(a, v) ? b : a;
  return Graph::from_adjacency(std::move(adj));
}

namespace {

// Adjacency prescribed by the sector rules, on the vertices that appear in
// `sectors` plus the center. Masks are in the caller's labeling.
std::vector<VertexSet> sector_adjacency(int n, int center, const std::vector<std::vector<int>>& sectors) {
  std::vector<VertexSet> adj(n, 0);
  auto link_pair = [&](int x, int y) {
    adj[x] |= singleton(y);
    adj[y] |= singleton(x);
  };
  const int m = static_cast<int>(sectors.size());
  for (int i = 0; i < m; ++i) {
    const auto& p = sectors[i];
    if (i % 2 == 1) {
      for (int x : p) link_pair(center, x);
    }
    for (std::size_t j = 0; j + 1 < p.size(); ++j) link_pair(p[j], p[j + 1]);
    for (int j = i + 1; j < m; ++j) {
      if ((i - j) % 2 == 0) continue;
      for (int x : p) {
        for (int y : sectors[j]) link_pair(x, y);
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    const int x = sectors[i].back();
    const int y = sectors[(i + 1) % m].front();
    adj[x] &= ~singleton(y);
    adj[y] &= ~singleton(x);
  }
  return adj;
}

// Ordered vertex lists of the components of g[within], or nullopt when some
// component is not an induced path.
std::optional<std::vector<std::vector<int>>> path_components(const Graph& g, VertexSet within) {
  std::vector<std::vector<int>> paths;
  VertexSet left = within;
  while (left) {
    VertexSet comp = singleton(lowest(left));
    for (VertexSet frontier = comp; frontier;) {
      VertexSet next = 0;
      for (VertexSet s = frontier; s; s &= s - 1) next |= g.neighbors(lowest(s)) & within;
      frontier = next & ~comp;
      comp |= next;
    }
    left &= ~comp;
    int edge_ends = 0;
    int start = -1;
    for (VertexSet s = comp; s; s &= s - 1) {
      const int d = size_of(g.neighbors(lowest(s)) & comp);
      if (d > 2) return std::nullopt;
      if (d <= 1 && start < 0) start = lowest(s);
      edge_ends += d;
    }
    if (edge_ends / 2 != size_of(comp) - 1 || start < 0) return std::nullopt;
    std::vector<int> path{start};
    VertexSet seen = singleton(start);
    while (static_cast<int>(path.size()) < size_of(comp)) {
      const VertexSet next = g.neighbors(path.back()) & comp & ~seen;
      path.push_back(lowest(next));
      seen |= next;
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace

GeneratedPreOddHole generate_pre_odd_hole(const std::vector<int>& sector_sizes) {
  const int m = static_cast<int>(sector_sizes.size());
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("pre-odd-hole needs an even number >= 2 of sectors");
  int total = 0;
  for (int s : sector_sizes) {
    if (s < 1) throw std::invalid_argument("sector sizes must be positive");
    total += s;
  }
  if (total % 2 == 0 || total < 5) throw std::invalid_argument("sector sizes must sum to an odd number >= 5");
  if (total + 1 > kMaxVertices) throw std::invalid_argument("too many vertices");
  std::vector<std::vector<int>> sectors;
  int next = 1;
  for (int s : sector_sizes) {
    std::vector<int> p(s);
    std::iota(p.begin(), p.end(), next);
    next += s;
    sectors.push_back(std::move(p));
  }
  return {Graph::from_adjacency(sector_adjacency(total + 1, 0, sectors)), 0};
}

std::optional<PreOddHoleWitness> recognize_pre_odd_hole(const Graph& g, int v) {
  const int n = g.n();
  if (v < 0 || v >= n) throw std::out_of_range("recognize_pre_odd_hole: vertex out of range");
  if (n < 6 || n % 2 != 0) return std::nullopt;
  const VertexSet nbr = g.neighbors(v);
  const VertexSet non = g.vertices() & ~nbr & ~singleton(v);
  if (!nbr || !non) return std::nullopt;
  auto odd = path_components(g, non);
  auto even = path_components(g, nbr);
  if (!odd || !even || odd->size() != even->size()) return std::nullopt;
  const int half = static_cast<int>(odd->size());
  const int m = 2 * half;

  std::vector<int> odd_order(half - 1), even_order(half);
  std::iota(odd_order.begin(), odd_order.end(), 1);
  std::iota(even_order.begin(), even_order.end(), 0);
  do {
    do {
      std::vector<std::vector<int>> sectors(m);
      sectors[0] = (*odd)[0];
      for (int i = 0; i < half; ++i) {
        if (i > 0) sectors[2 * i] = (*odd)[odd_order[i - 1]];
        sectors[2 * i + 1] = (*even)[even_order[i]];
      }
      for (std::uint64_t flips = 0; flips < (std::uint64_t{1} << m); ++flips) {
        bool redundant = false;
        std::vector<std::vector<int>> oriented = sectors;
        for (int i = 0; i < m; ++i) {
          if (!((flips >> i) & 1U)) continue;
          if (oriented[i].size() == 1) redundant = true;
          std::reverse(oriented[i].begin(), oriented[i].end());
        }
        if (redundant) continue;
        if (sector_adjacency(n, v, oriented) == g.adjacency()) return PreOddHoleWitness{v, oriented};
      }
    } while (std::next_permutation(even_order.begin(), even_order.end()));
  } while (std::next_permutation(odd_order.begin(), odd_order.end()));
  return std::nullopt;
}

std::optional<PreOddHoleWitness> recognize_pre_odd_antihole(const Graph& g, int v) { return recognize_pre_odd_hole(complement(g), v); }

bool spanning_odd_hole_criterion(const Graph& g, int v) {
  const int n = g.n();
  if (n < 6 || n % 2 != 0) return false;
  const VertexSet nbr = g.neighbors(v);
  if (!nbr || nbr == (g.vertices() & ~singleton(v))) return false;
  const Graph plus = link_graph_plus(g, v);
  return is_induced_cycle(plus, plus.vertices());
}

namespace {

std::vector<int> to_original(const std::vector<int>& seq, VertexSet universe) {
  std::vector<int> out;
  for (int x : seq) out.push_back(lowest(expand(singleton(x), universe)));
  return out;
}

Certificate structural_purity(const Graph& g, const Graph& gc, int v) {
  const VertexSet rest = g.vertices() & ~singleton(v);
  const VertexSet nbr = g.neighbors(v);
  for (VertexSet s : subsets_by_size(rest, 5)) {
    if (size_of(s) % 2 == 0) continue;
    for (int anti = 0; anti < 2; ++anti) {
      if (!is_induced_cycle(anti ? gc : g, s)) continue;
      const std::string shape = anti ? "antihole" : "hole";
      if ((s & nbr) == s) return Certificate::no(StructureWitness{shape + "_center", members(s), v});
      if ((s & nbr) == 0) return Certificate::no(StructureWitness{shape + "_anticenter", members(s), v});
    }
    const VertexSet with_v = s | singleton(v);
    const int local_v = size_of(with_v & full_set(v));
    for (int anti = 0; anti < 2; ++anti) {
      const Graph sub = induced(anti ? gc : g, with_v);
      if (auto w = recognize_pre_odd_hole(sub, local_v)) {
        PreOddHoleWitness mapped{v, {}};
        for (const auto& p : w->sectors) mapped.sectors.push_back(to_original(p, with_v));
        return Certificate::no(StructureWitness{anti ? "pre_odd_antihole" : "pre_odd_hole", members(with_v), v}, {{"sectors", to_json(mapped)["sectors"]}});
      }
    }
  }
  return Certificate::yes();
}

}  // namespace

Certificate is_pure_vertex(const Graph& g, int v, PurityMethod method) {
  if (v < 0 || v >= g.n()) throw std::out_of_range("is_pure_vertex: vertex out of range");
  if (method == PurityMethod::kStructural) return structural_purity(g, complement(g), v);
  const VertexSet rest = g.vertices() & ~singleton(v);
  if (auto w = find_odd_hole_or_antihole(link_graph_plus(g, v))) {
    return Certificate::no(StructureWitness{"link_" + w->kind, to_original(w->sequence, rest), v});
  }
  return Certificate::yes();
}

Certificate is_pure(const Graph& g) {
  const Graph gc = complement(g);
  Certificate verdict = Certificate::yes();
  for (int v = 0; v < g.n(); ++v) {
    Certificate structural = structural_purity(g, gc, v);
    Certificate links = is_pure_vertex(g, v, PurityMethod::kLinks);
    if (structural.verdict != links.verdict) throw std::logic_error("purity methods disagree at vertex " + std::to_string(v));
    if (structural.fails() && verdict.holds()) {
      verdict = std::move(structural);
      verdict.detail["link_witness"] = to_json(links.witness);
    }
  }
  return verdict;
}

Graph switching_graph(const Graph& h, VertexSet a) {
  if (!is_triangle_free(h)) throw std::invalid_argument("switching construction needs a triangle-free graph");
  if (a & ~h.vertices()) throw std::out_of_range("switching construction: A outside V(H)");
  if (h.n() + 1 > kMaxVertices) throw std::invalid_argument("too many vertices");
  const Graph switched = seidel_switch(h, a);
  std::vector<VertexSet> adj = switched.adjacency();
  const int v = h.n();
  for (VertexSet s = a; s; s &= s - 1) adj[lowest(s)] |= singleton(v);
  adj.push_back(a);
  return Graph::from_adjacency(std::move(adj));
}

SwitchingCounterexample switching_counterexample(const Graph& h, VertexSet a) {
  SwitchingCounterexample out;
  out.graph = switching_graph(h, a);
  out.v = h.n();
  out.cocycle = co(out.graph);
  out.link_matches = link(out.cocycle, singleton(out.v)) == h.hypergraph();
  out.omega = clique_number(out.cocycle);
  out.chi = chromatic_number(h);
  out.hypothesis = out.chi > 4;
  const int t = std::max(1, coloring_budget(out.cocycle));
  if (auto c = search_coloring(out.cocycle, singleton(out.v), t)) {
    out.obstruction = Certificate::yes(*c);
  } else {
    out.obstruction = Certificate::no(SubsetWitness{out.cocycle.vertices(), singleton(out.v), t, "no proper coloring of the pairs restricts to a proper vertex coloring of H"});
  }
  out.concluded = out.hypothesis && out.obstruction.fails();
  return out;
}

nlohmann::json to_json(const PreOddHoleWitness& w) { return {{"center", w.center}, {"sectors", w.sectors}}; }

}  // namespace hyperfect
