#include "hyperfect/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "hyperfect/canonical.hpp"
#include "hyperfect/classifiers.hpp"
#include "hyperfect/cocycles.hpp"
#include "hyperfect/coloring.hpp"
#include "hyperfect/enumerate.hpp"
#include "hyperfect/extremal.hpp"
#include "hyperfect/graph_perfect.hpp"
#include "hyperfect/ramsey.hpp"

namespace hyperfect {

nlohmann::json instance_json(const KHypergraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (VertexSet e : g.edges()) edges.push_back(members(e));
  return {{"n", g.n()}, {"k", g.k()}, {"edges", edges}};
}

std::vector<KHypergraph> graph_corpus(int nb) {
  std::vector<KHypergraph> out;
  for (int n = 1; n <= nb; ++n) {
    auto level = enumerate_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<KHypergraph> uniform_corpus(int k, int nb) {
  std::vector<KHypergraph> out;
  for (int n = k; n <= nb; ++n) {
    const auto slots = binomial(n, k);
    if (slots > static_cast<std::uint64_t>(EnumerateOptions{}.max_iso_slots)) break;
    if (slots <= 10) {
      for_each_labeled(k, n, [&](const KHypergraph& g) { out.push_back(g); });
    } else {
      auto level = enumerate_iso(k, n);
      out.insert(out.end(), level.begin(), level.end());
    }
  }
  return out;
}

std::vector<KHypergraph> standard_corpus(int nb) {
  auto out = graph_corpus(nb);
  for (int k : {3, 4}) {
    auto part = uniform_corpus(k, nb);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {

constexpr std::size_t kMaxCounterexamples = 20;

struct Outcome {
  std::uint64_t violations = 0;
  bool indeterminate = false;
  std::vector<nlohmann::json> notes;

  void violate(nlohmann::json note) {
    ++violations;
    notes.push_back(std::move(note));
  }
};

using Check = std::function<void(const KHypergraph&, Outcome&)>;

void add_counterexample(VerifyResult& r, nlohmann::json entry) {
  if (r.counterexamples.size() < kMaxCounterexamples) r.counterexamples.push_back(std::move(entry));
}

// Runs `check` on every instance and merges outcomes in corpus order.
void run_corpus(VerifyResult& r, const std::vector<KHypergraph>& corpus, int jobs, const Check& check) {
  std::vector<Outcome> outcomes(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t i) {
    try {
      check(corpus[i], outcomes[i]);
    } catch (const std::logic_error& e) {
      outcomes[i].violate({{"error", e.what()}});
    }
  });
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    ++r.instances;
    r.violations += outcomes[i].violations;
    r.partial = r.partial || outcomes[i].indeterminate;
    for (auto& note : outcomes[i].notes) add_counterexample(r, {{"instance", instance_json(corpus[i])}, {"violation", std::move(note)}});
  }
}

std::vector<VertexSet> small_sets(const KHypergraph& g) {
  std::vector<VertexSet> out;
  for (int s = 0; s < g.k() - 1; ++s) for_each_subset_of_size(g.vertices(), s, [&](VertexSet x) { out.push_back(x); });
  return out;
}

void note_corpus(VerifyResult& r, const std::vector<KHypergraph>& corpus) {
  std::map<std::string, int> sizes;
  for (const auto& g : corpus) ++sizes["k" + std::to_string(g.k()) + "_n" + std::to_string(g.n())];
  r.details["corpus"] = sizes;
}

VerifyResult verify_tetra(VerifyResult r, const VerifyOptions& o) {
  const auto corpus = standard_corpus(r.n_bound);
  note_corpus(r, corpus);
  run_corpus(r, corpus, o.jobs, [](const KHypergraph& g, Outcome& out) {
    const bool cf = is_clique_friendly(g).holds();
    if (is_c_omega_perfect(g).holds() && !cf) out.violate("C_omega-perfect but not clique friendly");
    if (!cf || g.n() != g.k() + 1 || g.is_complete()) return;
    for (VertexSet x : small_sets(g)) {
      if (link(g, x).is_complete()) out.violate({{"reason", "clique link in a non-complete clique-friendly instance"}, {"X", members(x)}});
    }
  });
  return r;
}

VerifyResult verify_smallerclique(VerifyResult r, const VerifyOptions& o) {
  const auto corpus = standard_corpus(r.n_bound);
  note_corpus(r, corpus);
  run_corpus(r, corpus, o.jobs, [](const KHypergraph& g, Outcome& out) {
    if (!is_c_omega_perfect(g).holds()) return;
    const int w = clique_number(g);
    for (VertexSet x : small_sets(g)) {
      const int wl = clique_number(link(g, x));
      if (wl > w - size_of(x)) out.violate({{"X", members(x)}, {"omega", w}, {"omega_link", wl}});
    }
  });
  return r;
}

VerifyResult verify_friendlycliques(VerifyResult r, const VerifyOptions& o) {
  const auto corpus = standard_corpus(r.n_bound);
  note_corpus(r, corpus);
  run_corpus(r, corpus, o.jobs, [](const KHypergraph& g, Outcome& out) {
    if (!is_clique_friendly(g).holds()) return;
    const int w = clique_number(g);
    for (VertexSet x : small_sets(g)) {
      const VertexSet rest = g.vertices() & ~x;
      const auto l = link(g, x);
      int wl = 0;
      for (VertexSet k = 0;; k = (k - rest) & rest) {
        if (is_clique(l, compress(k, rest))) {
          wl = std::max(wl, size_of(k));
          if (!is_clique(g, k | x)) out.violate({{"X", members(x)}, {"link_clique", members(k)}});
        }
        if (k == rest) break;
      }
      if (wl > w - size_of(x)) out.violate({{"X", members(x)}, {"omega", w}, {"omega_link", wl}});
      bool extends = false;
      for_each_subset_of_size(rest, w - size_of(x), [&](VertexSet k) {
        extends = is_clique(g, k | x);
        return !extends;
      });
      if (extends && wl != w - size_of(x)) out.violate({{"X", members(x)}, {"reason", "X lies in a maximum clique but omega(link) != omega - |X|"}});
    }
  });
  return r;
}

VerifyResult verify_berge_equiv(VerifyResult r, const VerifyOptions& o) {
  const auto corpus = standard_corpus(r.n_bound);
  note_corpus(r, corpus);
  run_corpus(r, corpus, o.jobs, [](const KHypergraph& g, Outcome& out) {
    const auto b = is_berge(g), c = is_c_omega_perfect(g);
    if (b.holds() != c.holds()) out.violate({{"berge", to_json(b)}, {"c_omega", to_json(c)}});
  });
  return r;
}

VerifyResult verify_hw_implies_cw(VerifyResult r, const VerifyOptions& o) {
  const auto corpus = standard_corpus(r.n_bound);
  note_corpus(r, corpus);
  std::vector<char> hw(corpus.size(), 0);
  run_corpus(r, corpus, o.jobs, [&](const KHypergraph& g, Outcome& out) {
    if (!is_h_omega_perfect(g).holds()) return;
    hw[&g - corpus.data()] = 1;
    if (!is_c_omega_perfect(g).holds()) out.violate("H_omega-perfect but not C_omega-perfect");
  });
  r.details["h_omega_instances"] = std::count(hw.begin(), hw.end(), 1);
  return r;
}

VerifyResult verify_gasp(VerifyResult r, const VerifyOptions& o) {
  const auto corpus = graph_corpus(r.n_bound);
  note_corpus(r, corpus);
  std::vector<char> perfect(corpus.size(), 0);
  run_corpus(r, corpus, o.jobs, [&](const KHypergraph& h, Outcome& out) {
    const Graph g(h);
    const bool c = is_c_omega_perfect(h).holds();
    perfect[&h - corpus.data()] = c;
    for (auto m : {PerfectMethod::kColoring, PerfectMethod::kAlphaOmega, PerfectMethod::kHoleScan}) {
      if (is_graph_perfect(g, m).holds() != c) out.violate({{"method", std::string(to_string(m))}, {"c_omega", c}});
    }
  });
  r.details["perfect_graphs"] = std::count(perfect.begin(), perfect.end(), 1);
  return r;
}

VerifyResult verify_perfect_r(VerifyResult r, const VerifyOptions& o) {
  const auto corpus = standard_corpus(r.n_bound);
  note_corpus(r, corpus);
  const auto& table = RamseyTable::standard();
  std::vector<int> status(corpus.size(), 0);
  run_corpus(r, corpus, o.jobs, [&](const KHypergraph& g, Outcome& out) {
    if (g.k() == 2) {
      const bool rp = is_r_perfect(g, table).holds();
      if (rp != is_graph_perfect(Graph(g)).holds()) out.violate({{"reason", "R-perfect differs from perfect"}, {"r_perfect", rp}});
    }
    const auto pc = has_pc_property(g);
    if (!pc.holds()) return;
    const auto& c = std::get<TupleColoring>(pc.witness);
    if (has_monochromatic_clique(c, g.k())) out.violate("product coloring has a monochromatic clique");
    const int s = (independence_number(g) - g.k() + 2) * (clique_number(g) - g.k() + 2);
    auto entry = table.lookup(s, g.k());
    status[&g - corpus.data()] = entry ? 2 : 1;
    if (entry && g.n() >= entry->value) out.violate({{"s", s}, {"ramsey", entry->value}});
  });
  r.details["pc_with_known_ramsey"] = std::count(status.begin(), status.end(), 2);
  r.details["pc_with_unknown_ramsey"] = std::count(status.begin(), status.end(), 1);
  return r;
}

bool all_four_sets_even(const KHypergraph& h) {
  bool even = true;
  for_each_subset_of_size(h.vertices(), 4, [&](VertexSet s) {
    int count = 0;
    for_each_subset_of_size(s, 3, [&](VertexSet e) { count += h.has_edge(e); });
    even = count % 2 == 0;
    return even;
  });
  return even;
}

VerifyResult verify_cocycleprop(VerifyResult r, const VerifyOptions& o) {
  constexpr std::size_t kTrials = 10000;
  const int max_n = std::max(r.n_bound, 3) + 3;
  std::vector<Outcome> outcomes(kTrials);
  parallel_for(kTrials, o.jobs, [&](std::size_t i) {
    std::mt19937_64 rng(0x5eed0000 + i);
    const int n = 1 + static_cast<int>(rng() % max_n);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (rng() & 1) edges.emplace_back(a, b);
      }
    }
    const auto g = Graph::from_edges(n, edges);
    const VertexSet x = rng() & g.vertices(), a = rng() & g.vertices();
    const auto c = co(g);
    if (complement(c) != co(complement(g))) outcomes[i].violate({{"trial", i}, {"identity", "complement"}});
    if (induced(c, x) != co(induced(g, x))) outcomes[i].violate({{"trial", i}, {"identity", "induced"}, {"X", members(x)}});
    if (co(seidel_switch(g, a)) != c) outcomes[i].violate({{"trial", i}, {"identity", "switching"}, {"A", members(a)}});
  });
  for (auto& out : outcomes) {
    r.instances += 3;
    r.violations += out.violations;
    for (auto& note : out.notes) add_counterexample(r, {{"violation", std::move(note)}});
  }
  r.details["random_trials_per_identity"] = kTrials;

  const auto graphs = graph_corpus(std::min(r.n_bound, 7));
  run_corpus(r, graphs, o.jobs, [](const KHypergraph& h, Outcome& out) {
    const Graph g(h);
    const auto c = co(g);
    auto cc = is_cocycle(c);
    if (!cc || co(*cc.representative) != c) out.violate("co(G) not recognized as a cocycle");
    for (int v = 0; v < g.n(); ++v) {
      if (link_graph_plus(g, v).hypergraph() != link(c, singleton(v))) out.violate({{"v", v}, {"reason", "G+(v) differs from the link"}});
    }
  });
  const auto threes = uniform_corpus(3, r.n_bound);
  run_corpus(r, threes, o.jobs, [](const KHypergraph& h, Outcome& out) {
    auto cc = is_cocycle(h);
    if (static_cast<bool>(cc) != all_four_sets_even(h)) out.violate("cocycle verdict differs from the 4-set parity count");
    if (cc && co(*cc.representative) != h) out.violate("representative does not reproduce the cocycle");
  });
  return r;
}

VerifyResult verify_doublyperfect(VerifyResult r, const VerifyOptions& o) {
  const auto graphs = graph_corpus(r.n_bound);
  std::vector<char> doubly_not_h(graphs.size(), 0);
  run_corpus(r, graphs, o.jobs, [&](const KHypergraph& h, Outcome& out) {
    const auto c = co(Graph(h));
    const bool hp = is_h_perfect(c).holds();
    const bool hw = is_h_omega_perfect(c).holds(), ha = is_h_alpha_perfect(c).holds();
    if (hp != (hw && ha)) out.violate({{"h_perfect", hp}, {"h_omega", hw}, {"h_alpha", ha}});
    const bool doubly = is_c_omega_perfect(c).holds() && is_c_alpha_perfect(c).holds();
    if (hp && !doubly) out.violate("H-perfect cocycle that is not doubly perfect");
    doubly_not_h[&h - graphs.data()] = doubly && !hp;
  });
  r.details["graphs"] = graphs.size();
  r.details["doubly_not_h_perfect"] = std::count(doubly_not_h.begin(), doubly_not_h.end(), 1);
  const auto threes = uniform_corpus(3, r.n_bound);
  r.details["three_uniform"] = threes.size();
  run_corpus(r, threes, o.jobs, [](const KHypergraph& h, Outcome& out) {
    if (is_doubly_perfect(h).holds() && !is_cocycle(h)) out.violate("doubly perfect but not a cocycle");
  });
  return r;
}

VerifyResult verify_perfectcocycle(VerifyResult r, const VerifyOptions& o) {
  const auto graphs = graph_corpus(r.n_bound);
  std::vector<int> per_n(r.n_bound + 1, 0);
  for (const auto& g : graphs) ++per_n[g.n()];
  r.details["graphs_per_n"] = per_n;
  std::vector<char> pure(graphs.size(), 0);
  run_corpus(r, graphs, o.jobs, [&](const KHypergraph& h, Outcome& out) {
    const Graph g(h);
    bool structural = true, links = true;
    for (int v = 0; v < g.n(); ++v) {
      structural = structural && is_pure_vertex(g, v, PurityMethod::kStructural).holds();
      links = links && is_pure_vertex(g, v, PurityMethod::kLinks).holds();
    }
    const bool hp = is_h_perfect(co(g)).holds();
    pure[&h - graphs.data()] = structural;
    if (structural != links || structural != hp) out.violate({{"structural", structural}, {"links", links}, {"h_perfect_co", hp}});
  });
  r.details["pure_graphs"] = std::count(pure.begin(), pure.end(), 1);
  return r;
}

VerifyResult verify_turan(VerifyResult r, const VerifyOptions& o) {
  nlohmann::json levels = nlohmann::json::array();
  for (int n = 3; n <= std::min(r.n_bound, 6); ++n) {
    const auto res = extremal_search(n, {"h_omega", "k4_free"}, o.jobs);
    const auto bound = tripartite_max_edges(n);
    const auto tri = canonical_form(complete_tripartite(n));
    bool has_tri = false;
    nlohmann::json ext = nlohmann::json::array();
    for (const auto& g : res.extremal) {
      has_tri = has_tri || canonical_form(g) == tri;
      ext.push_back(instance_json(g));
    }
    ++r.instances;
    levels.push_back({{"n", n}, {"max_edges", res.max_edges}, {"tripartite", bound}, {"examined", res.examined}, {"extremal", ext}});
    if (res.max_edges != bound || !has_tri) {
      ++r.violations;
      add_counterexample(r, {{"n", n}, {"max_edges", res.max_edges}, {"tripartite", bound}, {"tripartite_extremal", has_tri},
                             {"instance", res.extremal.empty() ? nlohmann::json() : instance_json(res.extremal.front())}});
    }
  }
  r.details["extremal"] = levels;

  for (int n = 3; n <= 12; ++n) {
    const auto t = turan_construction(n);
    ++r.instances;
    bool k4 = false, single = false;
    for_each_subset_of_size(t.vertices(), 4, [&](VertexSet s) {
      int count = 0;
      for_each_subset_of_size(s, 3, [&](VertexSet e) { count += t.has_edge(e); });
      k4 = k4 || count == 4;
      single = single || count == 1;
    });
    const bool hp = is_h_perfect(t).holds(), ha = is_h_alpha_perfect(t).holds();
    if (k4 || single || !hp || !ha || (n == 6 && t.edge_count() != 14)) {
      ++r.violations;
      add_counterexample(r, {{"construction", "turan"}, {"n", n}, {"k4", k4}, {"single_edge_4set", single}, {"h_perfect", hp}, {"h_alpha", ha}});
    }
  }
  for (int n = 6; n <= 12; ++n) {
    const std::int64_t line = 3 * n - 8, cone_count = (n - 1) * (n - 1) / 4;
    for (auto kind : {IntersectingKind::kB, IntersectingKind::kC, IntersectingKind::kLinkTriangle, IntersectingKind::kLinkStar}) {
      const auto g = intersecting_example(kind, n);
      const auto want = kind == IntersectingKind::kC ? cone_count : line;
      ++r.instances;
      if (static_cast<std::int64_t>(g.edge_count()) != want || !is_intersecting(g)) {
        ++r.violations;
        add_counterexample(r, {{"construction", std::string(to_string(kind))}, {"n", n}, {"edges", g.edge_count()}, {"expected", want}});
      }
    }
  }
  return r;
}

VerifyResult verify_chi_bound(VerifyResult r, const VerifyOptions& o) {
  auto run = [&](const std::vector<KHypergraph>& corpus, bool from_graphs) {
    run_corpus(r, corpus, o.jobs, [&](const KHypergraph& h, Outcome& out) {
      const auto c = from_graphs ? co(Graph(h)) : h;
      if (c.n() < c.k() || !is_doubly_perfect(c).holds()) return;
      const auto cover = min_independent_cover(c, o.budget);
      if (!cover) {
        out.indeterminate = true;
        return;
      }
      if (cover->size > clique_number(c) - 1) out.violate({{"cover", cover->size}, {"omega", clique_number(c)}});
    });
  };
  run(graph_corpus(r.n_bound), true);
  run(uniform_corpus(3, r.n_bound), false);
  return r;
}

VerifyResult verify_hd(VerifyResult r, const VerifyOptions& o) {
  const auto corpus = standard_corpus(r.n_bound);
  note_corpus(r, corpus);
  run_corpus(r, corpus, o.jobs, [&](const KHypergraph& g, Outcome& out) {
    const auto c = has_hd_property(g, g.k(), o.budget);
    if (c.indeterminate()) out.indeterminate = true;
    if (c.fails()) out.violate({{"r", g.k()}, {"certificate", to_json(c)}});
    if (g.k() == 2 && is_graph_perfect(Graph(g)).holds()) {
      const auto p = has_hd_property(g, 1, o.budget);
      if (p.indeterminate()) out.indeterminate = true;
      if (p.fails()) out.violate({{"r", 1}, {"certificate", to_json(p)}});
    }
  });
  return r;
}

VerifyResult verify_fig1(VerifyResult r, const VerifyOptions& o) {
  const auto corpus = standard_corpus(r.n_bound);
  note_corpus(r, corpus);
  static const std::vector<std::string> names{"clique_friendly", "berge", "c_omega", "c_alpha", "doubly", "h_perfect", "h_omega", "h_alpha"};
  std::vector<std::vector<char>> flags(corpus.size());
  run_corpus(r, corpus, o.jobs, [&](const KHypergraph& g, Outcome& out) {
    auto& f = flags[&g - corpus.data()];
    f = {is_clique_friendly(g).holds(), is_berge(g).holds(), is_c_omega_perfect(g).holds(), is_c_alpha_perfect(g).holds(),
         is_doubly_perfect(g).holds(), is_h_perfect(g).holds(), is_h_omega_perfect(g).holds(), is_h_alpha_perfect(g).holds()};
    const bool cf = f[0], berge = f[1], cw = f[2], ca = f[3], doubly = f[4], hp = f[5], hw = f[6];
    if (hw && !berge) out.violate("H_omega-perfect but not Berge");
    if (berge != cw) out.violate("Berge and C_omega-perfect differ");
    if (cw && !cf) out.violate("C_omega-perfect but not clique friendly");
    if (doubly != (cw && ca)) out.violate("doubly perfect differs from C_omega and C_alpha");
    if (hw != (hp && cf)) out.violate("H_omega differs from H and clique friendly");
    if (doubly && g.k() > 3 && g.edge_count() != 0 && !g.is_complete()) out.violate("doubly perfect for k > 3 but neither empty nor complete");
    if (doubly && g.k() == 3 && !is_cocycle(g)) out.violate("doubly perfect 3-graph that is not a cocycle");
  });
  nlohmann::json counts = nlohmann::json::object(), strict = nlohmann::json::object();
  for (int k = 2; k <= 4; ++k) {
    nlohmann::json per_class = nlohmann::json::object();
    for (std::size_t c = 0; c < names.size(); ++c) {
      int count = 0;
      for (std::size_t i = 0; i < corpus.size(); ++i) count += corpus[i].k() == k && flags[i][c];
      per_class[names[c]] = count;
    }
    counts["k" + std::to_string(k)] = per_class;
    // C_omega-perfect but not H_omega-perfect, first in corpus order.
    nlohmann::json witness;
    for (std::size_t i = 0; i < corpus.size() && witness.is_null(); ++i) {
      if (corpus[i].k() == k && flags[i][2] && !flags[i][6]) witness = instance_json(corpus[i]);
    }
    strict["k" + std::to_string(k)] = witness.is_null() ? nlohmann::json("none at this scale") : witness;
  }
  r.details["class_counts"] = counts;
  r.details["c_omega_not_h_omega"] = strict;
  return r;
}

void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int s = 1; s <= total - (parts - 1); ++s) {
    cur.push_back(s);
    compositions(total - s, parts - 1, cur, out);
    cur.pop_back();
  }
}

struct Fig2Hit {
  bool candidate = false;
  nlohmann::json hit;
};

// Link of v in co(G) must be a hole on all remaining vertices; the cocycle
// must then be doubly perfect and not H-perfect.
Fig2Hit fig2_check(const Graph& g, int v, Outcome& out) {
  const auto c = co(g);
  const Graph lg(link(c, singleton(v)));
  if (!is_induced_cycle(lg, lg.vertices())) return {};
  Fig2Hit result{true, {}};
  if (!is_doubly_perfect(c).holds() || is_h_perfect(c).holds()) return result;
  if (is_pure(g).holds()) out.violate({{"reason", "instance reported pure"}});
  nlohmann::json edges = nlohmann::json::array();
  for (VertexSet e : g.hypergraph().edges()) edges.push_back(members(e));
  result.hit = {{"v", v}, {"graph", {{"n", g.n()}, {"edges", edges}}}};
  return result;
}

VerifyResult verify_fig2(VerifyResult r, const VerifyOptions& o) {
  const int total = r.n_bound - 1;
  std::vector<std::vector<int>> profiles;
  if (total >= 5 && total % 2 == 1) {
    for (int m = 2; m <= total; m += 2) {
      std::vector<int> cur;
      compositions(total, m, cur, profiles);
    }
  }
  std::vector<Graph> graphs;
  std::vector<int> centers;
  for (const auto& p : profiles) {
    auto gen = generate_pre_odd_hole(p);
    graphs.push_back(gen.graph);
    centers.push_back(gen.center);
  }
  const bool exhaustive = binomial(r.n_bound, 2) <= static_cast<std::uint64_t>(EnumerateOptions{}.max_iso_slots);
  if (exhaustive) {
    for (const auto& h : enumerate_graphs(r.n_bound)) {
      for (int v = 0; v < h.n(); ++v) {
        graphs.emplace_back(h);
        centers.push_back(v);
      }
    }
  }
  std::vector<Fig2Hit> hits(graphs.size());
  std::vector<Outcome> outcomes(graphs.size());
  parallel_for(graphs.size(), o.jobs, [&](std::size_t i) { hits[i] = fig2_check(graphs[i], centers[i], outcomes[i]); });
  nlohmann::json found = nlohmann::json::array();
  std::size_t candidates = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    ++r.instances;
    candidates += hits[i].candidate;
    r.violations += outcomes[i].violations;
    for (auto& note : outcomes[i].notes) add_counterexample(r, {{"violation", std::move(note)}});
    if (!hits[i].hit.is_null()) {
      if (i < profiles.size()) hits[i].hit["sectors"] = profiles[i];
      found.push_back(hits[i].hit);
    }
  }
  r.details["profiles"] = profiles.size();
  r.details["exhaustive_over_all_graphs"] = exhaustive;
  r.details["hole_link_candidates"] = candidates;
  r.details["found"] = found;
  return r;
}

VerifyResult verify_s41(VerifyResult r, const VerifyOptions& o) {
  const Graph h = r.n_bound >= 23 ? mycielskian(grotzsch_graph()) : grotzsch_graph();
  r.details["h_vertices"] = h.n();
  r.details["triangle_free"] = is_triangle_free(h);
  if (!is_triangle_free(h)) {
    ++r.violations;
    return r;
  }
  std::vector<VertexSet> choices{0, h.vertices()};
  std::mt19937_64 rng(41);
  for (int i = 0; i < 6; ++i) choices.push_back(rng() & h.vertices());
  std::vector<SwitchingCounterexample> results(choices.size());
  parallel_for(choices.size(), o.jobs, [&](std::size_t i) { results[i] = switching_counterexample(h, choices[i]); });
  nlohmann::json runs = nlohmann::json::array();
  for (std::size_t i = 0; i < choices.size(); ++i) {
    const auto& s = results[i];
    ++r.instances;
    runs.push_back({{"A", members(choices[i])}, {"link_matches", s.link_matches}, {"omega", s.omega}, {"chi", s.chi},
                    {"hypothesis", s.hypothesis}, {"obstruction", to_json(s.obstruction)}, {"concluded", s.concluded}});
    if (!s.link_matches || s.omega != 4 || !s.concluded) {
      ++r.violations;
      add_counterexample(r, runs.back());
    }
  }
  r.details["runs"] = runs;
  return r;
}

struct Entry {
  std::string id;
  int default_n;
  VerifyResult (*run)(VerifyResult, const VerifyOptions&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {"tetra", 6, verify_tetra},
      {"smallerclique", 6, verify_smallerclique},
      {"friendlycliques", 6, verify_friendlycliques},
      {"berge-equiv", 5, verify_berge_equiv},
      {"hw-implies-cw", 6, verify_hw_implies_cw},
      {"gasp", 7, verify_gasp},
      {"perfectR", 5, verify_perfect_r},
      {"cocycleprop", 6, verify_cocycleprop},
      {"doublyperfect", 6, verify_doublyperfect},
      {"perfectcocycle", 7, verify_perfectcocycle},
      {"turan", 6, verify_turan},
      {"chi-bound", 7, verify_chi_bound},
      {"hd", 6, verify_hd},
      {"fig1-arrows", 6, verify_fig1},
      {"fig2-search", 8, verify_fig2},
      {"s41-counterexample", 23, verify_s41},
  };
  return entries;
}

const Entry& find_entry(const std::string& id) {
  for (const auto& e : registry()) {
    if (e.id == id) return e;
  }
  throw UnknownTheorem(id);
}

}  // namespace

const std::vector<std::string>& verify_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.id);
    return out;
  }();
  return ids;
}

int default_n_bound(const std::string& id) { return find_entry(id).default_n; }

VerifyResult verify(const std::string& id, const VerifyOptions& options) {
  const auto& entry = find_entry(id);
  VerifyResult r;
  r.id = id;
  r.n_bound = options.n_bound > 0 ? options.n_bound : entry.default_n;
  if (r.n_bound > 64) throw std::invalid_argument("n bound above 64");
  r = entry.run(std::move(r), options);
  r.passed = r.violations == 0 && !r.partial && r.instances > 0;
  if (id == "fig2-search") r.passed = r.passed && !r.details["found"].empty();
  return r;
}

nlohmann::json to_json(const VerifyResult& r) {
  return {{"schema", 1},
          {"id", r.id},
          {"n_bound", r.n_bound},
          {"passed", r.passed},
          {"partial", r.partial},
          {"instances", r.instances},
          {"violations", r.violations},
          {"counterexamples", r.counterexamples},
          {"details", r.details}};
}

std::string to_text(const VerifyResult& r) {
  std::ostringstream out;
  out << r.id << " n<=" << r.n_bound << ": " << (r.passed ? "pass" : "FAIL") << (r.partial ? " (partial)" : "") << "\n"
      << "instances " << r.instances << "\nviolations " << r.violations << '\n';
  for (const auto& c : r.counterexamples) out << "counterexample " << c.dump() << '\n';
  return out.str();
}

}  // namespace hyperfect
