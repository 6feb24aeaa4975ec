#include "hyperfect/coloring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hyperfect/memo.hpp"

namespace hyperfect {
namespace {

void check_arity(const KHypergraph& g, const TupleColoring& c) {
  if (c.arity() != g.k() - 1) throw std::invalid_argument("coloring arity " + std::to_string(c.arity()) + " does not match k-1 = " + std::to_string(g.k() - 1));
  if (c.n() != g.n()) throw std::invalid_argument("coloring is defined on a different vertex count");
}

/// Colors of F \ {y} for y in F \ fixed are not all equal.
bool not_monochromatic(const TupleColoring& c, VertexSet edge, VertexSet fixed) {
  int first = -1;
  for (VertexSet s = edge & ~fixed; s; s &= s - 1) {
    const int color = c.color_at(colex_rank(edge & ~(s & (~s + 1))));
    if (first < 0) {
      first = color;
    } else if (color != first) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_proper(const KHypergraph& g, const TupleColoring& c) {
  check_arity(g, c);
  for (VertexSet e : g.edges()) {
    if (!not_monochromatic(c, e, 0)) return false;
  }
  return true;
}

bool restricts_properly(const KHypergraph& g, VertexSet x, const TupleColoring& c) {
  check_arity(g, c);
  if (size_of(x) >= g.k() - 1) throw std::invalid_argument("restricts_properly: |X| must be < k-1");
  for (VertexSet e : g.edges()) {
    if ((e & x) == x && !not_monochromatic(c, e, x)) return false;
  }
  return true;
}

int coloring_budget(const KHypergraph& g) { return clique_number(g) - g.k() + 2; }

namespace {

struct ColoringSearch {
  int t;
  std::vector<std::uint64_t> order;             // search position -> tuple rank
  std::vector<std::vector<std::vector<std::uint64_t>>> checks;  // constraints completed at each position
  std::vector<int> color;                       // by tuple rank, -1 unassigned

  bool satisfied(const std::vector<std::uint64_t>& tuple_ranks) const {
    const int first = color[tuple_ranks.front()];
    for (auto r : tuple_ranks) {
      if (color[r] != first) return true;
    }
    return false;
  }

  bool solve(std::size_t pos, int used) {
    if (pos == order.size()) return true;
    const auto var = order[pos];
    const int top = std::min(t - 1, used);
    for (int c = 0; c <= top; ++c) {
      color[var] = c;
      bool ok = true;
      for (const auto& check : checks[pos]) {
        if (!satisfied(check)) {
          ok = false;
          break;
        }
      }
      if (ok && solve(pos + 1, std::max(used, c + 1))) return true;
    }
    color[var] = -1;
    return false;
  }
};

}  // namespace

std::optional<TupleColoring> search_coloring(const KHypergraph& g, VertexSet x, int t) {
  const int k = g.k();
  const int arity = k - 1;
  if (t < 1) throw std::invalid_argument("search_coloring: color count must be >= 1");
  if (arity < 1) throw std::invalid_argument("search_coloring: needs k >= 2");
  if ((x & ~g.vertices()) != 0) throw std::out_of_range("search_coloring: X outside the vertex set");
  if (size_of(x) >= arity) throw std::invalid_argument("search_coloring: |X| must be < k-1");

  const std::uint64_t tuples = binomial(g.n(), arity);
  std::vector<std::vector<std::uint64_t>> constraints;
  std::vector<char> constrained(tuples, 0);
  for (VertexSet e : g.edges()) {
    const VertexSet free = (x != 0 && (e & x) == x) ? e & ~x : e;
    std::vector<std::uint64_t> ranks;
    for (VertexSet s = free; s; s &= s - 1) ranks.push_back(colex_rank(e & ~(s & (~s + 1))));
    for (auto r : ranks) constrained[r] = 1;
    constraints.push_back(std::move(ranks));
  }

  ColoringSearch search;
  search.t = t;
  search.color.assign(tuples, -1);
  std::vector<std::uint64_t> position(tuples, 0);
  for (int pass = 0; pass < 2; ++pass) {
    for (std::uint64_t r = 0; r < tuples; ++r) {
      if (!constrained[r]) continue;
      const bool has_x = (colex_unrank(r, arity) & x) == x;
      if ((pass == 0) != has_x) continue;
      position[r] = search.order.size();
      search.order.push_back(r);
    }
  }
  search.checks.resize(search.order.size());
  for (auto& ranks : constraints) {
    std::uint64_t last = 0;
    for (auto r : ranks) last = std::max(last, position[r]);
    search.checks[last].push_back(std::move(ranks));
  }
  if (!search.solve(0, 0)) return std::nullopt;
  for (auto& c : search.color) c = std::max(c, 0);
  return TupleColoring(arity, g.n(), t, std::move(search.color));
}

TupleColoring compose_berge_coloring(const KHypergraph& g, VertexSet x, const std::map<VertexSet, TupleColoring>& per_y) {
  const int k = g.k();
  if (k < 2) throw std::invalid_argument("compose_berge_coloring: needs k >= 2");
  if (size_of(x) > k - 2) throw std::invalid_argument("compose_berge_coloring: |X| must be <= k-2");
  if (x != full_set(size_of(x))) throw std::invalid_argument("compose_berge_coloring: X must be an initial segment of the vertex order");
  const int arity = k - 1;
  int colors = 1;
  std::map<VertexSet, bool> validated;
  std::vector<int> out(binomial(g.n(), arity), 0);
  for (std::uint64_t r = 0; r < out.size(); ++r) {
    const VertexSet z = colex_unrank(r, arity);
    const VertexSet y = z & ~singleton(highest(z));
    auto it = per_y.find(y);
    if (it == per_y.end()) throw std::invalid_argument("compose_berge_coloring: missing coloring for Y = {" + [&] {
      std::string s;
      for (int v : members(y)) s += (s.empty() ? "" : ",") + std::to_string(v);
      return s;
    }() + "}");
    const TupleColoring& cy = it->second;
    if (!validated.count(y)) {
      check_arity(g, cy);
      if (!is_proper(g, cy) || !restricts_properly(g, y, cy)) throw std::invalid_argument("compose_berge_coloring: input coloring is not proper for its link");
      validated[y] = true;
    }
    colors = std::max(colors, cy.num_colors());
    out[r] = cy.color_at(r);
  }
  return TupleColoring(arity, g.n(), colors, std::move(out));
}

namespace {

CanonicalMemo<bool>& berge_memo() {
  static CanonicalMemo<bool> memo;
  return memo;
}

CanonicalMemo<bool>& c_omega_memo() {
  static CanonicalMemo<bool> memo;
  return memo;
}

/// First X (by size, then colex) in [min_x, max_x] for which no coloring
/// exists, or nullopt when the local condition holds.
std::optional<VertexSet> local_failure(const KHypergraph& g, int min_x, int max_x, int t) {
  std::optional<VertexSet> failure;
  for (int size = min_x; size <= max_x && !failure; ++size) {
    for_each_subset_of_size(g.vertices(), size, [&](VertexSet x) {
      if (!search_coloring(g, x, t)) {
        failure = x;
        return false;
      }
      return true;
    });
  }
  return failure;
}

Certificate hereditary_coloring_check(const KHypergraph& g, bool berge) {
  const int k = g.k();
  if (k < 2) throw std::invalid_argument("coloring perfectness needs k >= 2");
  const int max_x = k - 2;
  const int min_x = berge ? k - 2 : 0;
  auto& memo = berge ? berge_memo() : c_omega_memo();
  for (VertexSet s : subsets_by_size(g.vertices())) {
    if (size_of(s) < k - 1) continue;  // no (k-1)-tuples to color
    const KHypergraph sub = induced(g, s);
    const CanonicalForm key = canonical_form(sub);
    auto known = memo.find(key);
    if (known && *known) continue;
    const int t = coloring_budget(sub);
    if (known && !*known) {
      auto x = local_failure(sub, min_x, max_x, t);
      return Certificate::no(SubsetWitness{s, expand(*x, s), t, "no proper coloring restricting to the link of X"});
    }
    auto x = local_failure(sub, min_x, max_x, t);
    memo.insert(key, !x.has_value());
    if (x) return Certificate::no(SubsetWitness{s, expand(*x, s), t, "no proper coloring restricting to the link of X"});
  }
  return Certificate::yes();
}

}  // namespace

Certificate is_berge(const KHypergraph& g) { return hereditary_coloring_check(g, true); }

Certificate is_c_omega_perfect(const KHypergraph& g) { return hereditary_coloring_check(g, false); }

Certificate is_c_alpha_perfect(const KHypergraph& g) {
  Certificate c = is_c_omega_perfect(complement(g));
  c.detail = nlohmann::json{{"on", "complement"}};
  return c;
}

Certificate is_doubly_perfect(const KHypergraph& g) {
  Certificate omega = is_c_omega_perfect(g);
  if (!omega.holds()) {
    omega.detail = nlohmann::json{{"failed", "c_omega"}};
    return omega;
  }
  Certificate alpha = is_c_alpha_perfect(g);
  if (!alpha.holds()) alpha.detail = nlohmann::json{{"failed", "c_alpha"}};
  return alpha;
}

void clear_coloring_cache() {
  berge_memo().clear();
  c_omega_memo().clear();
}

std::size_t coloring_cache_size() { return berge_memo().size() + c_omega_memo().size(); }

std::string format_coloring(const TupleColoring& c) {
  std::ostringstream out;
  for (std::uint64_t r = 0; r < c.size(); ++r) {
    for (int v : members(colex_unrank(r, c.arity()))) out << v << ' ';
    out << c.color_at(r) << '\n';
  }
  return out.str();
}

}  // namespace hyperfect
