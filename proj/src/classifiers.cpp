#include "hyperfect/classifiers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "hyperfect/canonical.hpp"
#include "hyperfect/coloring.hpp"
#include "hyperfect/graph.hpp"
#include "hyperfect/graph_perfect.hpp"

namespace hyperfect {

Certificate is_clique_friendly(const KHypergraph& g) {
  const int k = g.k();
  std::optional<VertexSet> bad;
  int bad_count = 0;
  for_each_subset_of_size(g.vertices(), k + 1, [&](VertexSet s) {
    int count = 0;
    for (VertexSet t = s; t; t &= t - 1) count += g.has_edge(s & ~(t & (~t + 1)));
    if (count >= 3 && count <= k) {
      bad = s;
      bad_count = count;
      return false;
    }
    return true;
  });
  if (bad) return Certificate::no(SubsetWitness{*bad, 0, 0, "spans between 3 and k edges"}, {{"edges", bad_count}});
  return Certificate::yes();
}

Certificate is_h_perfect(const KHypergraph& g) {
  const int k = g.k();
  if (k < 2) throw std::invalid_argument("H-perfectness needs k >= 2");
  Certificate result = Certificate::yes();
  for_each_subset_of_size(g.vertices(), k - 2, [&](VertexSet x) {
    const Graph l(link(g, x));
    Certificate c = is_graph_perfect(l);
    if (!c.fails()) return true;
    // Report the hole in the original labeling.
    auto w = std::get<StructureWitness>(c.witness);
    const VertexSet rest = g.vertices() & ~x;
    for (int& v : w.sequence) v = lowest(expand(singleton(v), rest));
    result = Certificate::no(SubsetWitness{g.vertices(), x, 0, "link of X is not a perfect graph"},
                             {{"link_witness", to_json(Witness{w})}});
    return false;
  });
  return result;
}

Certificate is_h_omega_perfect(const KHypergraph& g) {
  Certificate h = is_h_perfect(g);
  if (!h.holds()) {
    h.detail["failed"] = "h_perfect";
    return h;
  }
  Certificate cf = is_clique_friendly(g);
  if (!cf.holds()) cf.detail["failed"] = "clique_friendly";
  return cf;
}

Certificate is_h_alpha_perfect(const KHypergraph& g) {
  Certificate c = is_h_omega_perfect(complement(g));
  c.detail["on"] = "complement";
  return c;
}

namespace {

enum class Local { kOk, kFail, kUnknown };

struct LocalR {
  Local status = Local::kOk;
  VertexSet x = 0;
  int s = 0;
  int k = 0;
  int vertices = 0;
  int bound = 0;
};

// Checks the inequality on h itself and on every link of X with |X| < k-1.
LocalR local_r(const KHypergraph& h, const RamseyTable& table) {
  LocalR first_unknown;
  LocalR result;
  const int k = h.k();
  for (int size = 0; size < k - 1; ++size) {
    for_each_subset_of_size(h.vertices(), size, [&](VertexSet x) {
      const KHypergraph l = size == 0 ? h : link(h, x);
      const int kk = l.k();
      if (l.n() < kk - 1) return true;
      const int s = (independence_number(l) - kk + 2) * (clique_number(l) - kk + 2);
      auto r = table.value(s, kk);
      if (!r) {
        if (first_unknown.status == Local::kOk) first_unknown = {Local::kUnknown, x, s, kk, l.n(), 0};
        return true;
      }
      if (l.n() >= *r) {
        result = {Local::kFail, x, s, kk, l.n(), *r};
        return false;
      }
      return true;
    });
    if (result.status == Local::kFail) return result;
  }
  return first_unknown;
}

}  // namespace

Certificate is_r_perfect(const KHypergraph& g, const RamseyTable& table) {
  const int k = g.k();
  std::unordered_map<CanonicalForm, Local, CanonicalFormHash> memo;
  std::optional<std::pair<VertexSet, LocalR>> unknown;
  for (VertexSet s : subsets_by_size(g.vertices())) {
    if (size_of(s) < k - 1) continue;
    const KHypergraph sub = induced(g, s);
    const CanonicalForm key = canonical_form(sub);
    auto it = memo.find(key);
    if (it != memo.end() && it->second == Local::kOk) continue;
    if (it != memo.end() && it->second == Local::kUnknown && unknown) continue;
    const LocalR r = local_r(sub, table);
    memo[key] = r.status;
    if (r.status == Local::kFail) {
      return Certificate::no(SubsetWitness{s, expand(r.x, s), r.s, "|V| >= R_s(k) on the link of X"},
                             {{"s", r.s}, {"k", r.k}, {"vertices", r.vertices}, {"ramsey", r.bound}});
    }
    if (r.status == Local::kUnknown && !unknown) unknown = {s, r};
  }
  if (unknown) {
    Certificate c = Certificate::unknown(RamseyUnknown(unknown->second.s, unknown->second.k).what());
    c.detail["s"] = unknown->second.s;
    c.detail["k"] = unknown->second.k;
    c.detail["subset"] = members(unknown->first);
    c.detail["fixed"] = members(expand(unknown->second.x, unknown->first));
    return c;
  }
  return Certificate::yes();
}

Certificate has_pc_property(const KHypergraph& g) {
  const int k = g.k();
  const KHypergraph co = complement(g);
  const int t1 = std::max(1, coloring_budget(g));
  const int t2 = std::max(1, coloring_budget(co));
  auto c1 = search_coloring(g, 0, t1);
  if (!c1) return Certificate::no(SubsetWitness{g.vertices(), 0, t1, "no proper (omega-k+2)-coloring"}, {{"side", "graph"}});
  auto c2 = search_coloring(co, 0, t2);
  if (!c2) return Certificate::no(SubsetWitness{g.vertices(), 0, t2, "no proper (alpha-k+2)-coloring of the complement"}, {{"side", "complement"}});
  std::vector<int> product(c1->size());
  for (std::size_t r = 0; r < product.size(); ++r) product[r] = c1->color_at(r) * t2 + c2->color_at(r);
  TupleColoring c(k - 1, g.n(), t1 * t2, std::move(product));
  if (has_monochromatic_clique(c, k)) throw std::logic_error("product coloring has a monochromatic K_k^{k-1}");
  return Certificate::yes(c, {{"colors", t1 * t2}, {"graph_coloring", to_json(*c1)}, {"complement_coloring", to_json(*c2)}});
}

bool is_independent(const KHypergraph& g, VertexSet s) {
  bool independent = true;
  for_each_subset_of_size(s, g.k(), [&](VertexSet e) {
    if (g.has_edge(e)) independent = false;
    return independent;
  });
  return independent;
}

namespace {

struct CoverSearch {
  const KHypergraph& g;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  int lower = 1;
  std::vector<int> order;
  std::vector<VertexSet> classes;
  std::vector<VertexSet> best_classes;
  int best = 0;

  bool can_add(VertexSet cls, int v) const {
    if (size_of(cls) < g.k() - 1) return true;
    bool ok = true;
    for_each_subset_of_size(cls, g.k() - 1, [&](VertexSet t) {
      if (g.has_edge(t | singleton(v))) ok = false;
      return ok;
    });
    return ok;
  }

  void run(std::size_t idx) {
    if (exhausted || best == lower) return;
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    if (static_cast<int>(classes.size()) >= best) return;
    if (idx == order.size()) {
      best = static_cast<int>(classes.size());
      best_classes = classes;
      return;
    }
    const int v = order[idx];
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (!can_add(classes[i], v)) continue;
      classes[i] |= singleton(v);
      run(idx + 1);
      classes[i] &= ~singleton(v);
    }
    if (static_cast<int>(classes.size()) + 1 < best) {
      classes.push_back(singleton(v));
      run(idx + 1);
      classes.pop_back();
    }
  }
};

}  // namespace

std::optional<IndependentCover> min_independent_cover(const KHypergraph& g, std::uint64_t budget) {
  const int n = g.n();
  if (n == 0) return IndependentCover{};
  CoverSearch search{g, budget, 0, false, 1, {}, {}, {}, 0};
  const int alpha = independence_number(g);
  search.lower = (n + alpha - 1) / alpha;
  const auto deg = degrees(g);
  for (int v = 0; v < n; ++v) search.order.push_back(v);
  std::stable_sort(search.order.begin(), search.order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
  search.best = n + 1;
  search.run(0);
  if (search.exhausted) return std::nullopt;
  std::sort(search.best_classes.begin(), search.best_classes.end());
  return IndependentCover{search.best, search.best_classes};
}

std::optional<IndependentCover> min_clique_cover(const KHypergraph& g, std::uint64_t budget) {
  return min_independent_cover(complement(g), budget);
}

Certificate has_hd_property(const KHypergraph& g, int r, std::uint64_t budget) {
  if (r < 1) throw std::invalid_argument("HD_r needs r >= 1");
  const int k = g.k();
  const int n = g.n();
  std::optional<IndependentCover> cover;
  bool cover_known = false;
  bool unknown = false;
  nlohmann::json checked = nlohmann::json::array();
  for (int p = k; p <= n; ++p) {
    int min_omega = p;
    for_each_subset_of_size(g.vertices(), p, [&](VertexSet s) {
      min_omega = std::min(min_omega, clique_number(induced(g, s)));
      return min_omega >= k;
    });
    for (int q = k; q <= p; ++q) {
      if (p * (r - 1) >= (q - 1) * r) continue;
      if (min_omega < q) continue;
      if (!cover_known) {
        cover = min_clique_cover(g, budget);
        cover_known = true;
      }
      if (!cover) {
        unknown = true;
        continue;
      }
      checked.push_back({p, q});
      if (cover->size > p - q + 1) {
        nlohmann::json cls = nlohmann::json::array();
        for (VertexSet c : cover->classes) cls.push_back(members(c));
        return Certificate::no(SubsetWitness{g.vertices(), 0, p - q + 1, "every p-set has a q-clique but more than p-q+1 cliques are needed"},
                               {{"p", p}, {"q", q}, {"min_clique_in_p_sets", min_omega}, {"min_clique_cover", cover->size}, {"cover", cls}});
      }
    }
  }
  if (unknown) return Certificate::unknown("clique cover search exceeded the node budget");
  return Certificate::yes({}, {{"pairs_with_hypothesis", checked}, {"r", r}});
}

Certificate chi_bound_cover(const KHypergraph& g, std::uint64_t budget) {
  const int f = clique_number(g) - g.k() + 2;
  auto cover = min_independent_cover(g, budget);
  if (!cover) return Certificate::unknown("independent cover search exceeded the node budget");
  nlohmann::json cls = nlohmann::json::array();
  for (VertexSet c : cover->classes) cls.push_back(members(c));
  nlohmann::json detail{{"bound", f}, {"cover_size", cover->size}, {"cover", cls}};
  if (cover->size > f) return Certificate::no(SubsetWitness{g.vertices(), 0, f, "independent cover exceeds omega-k+2"}, detail);
  return Certificate::yes({}, detail);
}

namespace {

struct UpperChromatic {
  int n;
  std::vector<std::vector<VertexSet>> edges_ending_at;
  std::vector<int> color;
  int best = 0;

  bool rainbow(VertexSet e) const {
    std::uint64_t seen = 0;
    for (VertexSet s = e; s; s &= s - 1) {
      const std::uint64_t bit = std::uint64_t{1} << color[lowest(s)];
      if (seen & bit) return false;
      seen |= bit;
    }
    return true;
  }

  void run(int v, int used) {
    if (used + (n - v) <= best) return;
    if (v == n) {
      best = used;
      return;
    }
    // Try a fresh color first so good solutions appear early.
    for (int c = used; c >= 0; --c) {
      color[v] = c;
      bool ok = true;
      for (VertexSet e : edges_ending_at[v]) {
        if (rainbow(e)) {
          ok = false;
          break;
        }
      }
      if (ok) run(v + 1, std::max(used, c + 1));
    }
    color[v] = -1;
  }
};

}  // namespace

int voloshin_upper_chromatic(const KHypergraph& g) {
  UpperChromatic search{g.n(), std::vector<std::vector<VertexSet>>(g.n()), std::vector<int>(g.n(), -1)};
  for (VertexSet e : g.edges()) search.edges_ending_at[highest(e)].push_back(e);
  search.run(0, 0);
  return search.best;
}

Certificate is_voloshin_perfect(const KHypergraph& g) {
  std::unordered_map<CanonicalForm, bool, CanonicalFormHash> memo;
  for (VertexSet s : subsets_by_size(g.vertices())) {
    const KHypergraph h = induced(g, s);
    const CanonicalForm key = canonical_form(h);
    if (auto it = memo.find(key); it != memo.end() && it->second) continue;
    const int chi_bar = voloshin_upper_chromatic(h);
    const int alpha = independence_number(h);
    if (chi_bar > alpha) throw std::logic_error("upper chromatic number exceeds alpha");
    memo[key] = chi_bar == alpha;
    if (chi_bar != alpha) {
      return Certificate::no(SubsetWitness{s, 0, chi_bar, "upper chromatic number below alpha"}, {{"upper_chromatic", chi_bar}, {"alpha", alpha}});
    }
  }
  return Certificate::yes();
}

}  // namespace hyperfect
