#include <CLI11.hpp>

#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "hyperfect/cocycles.hpp"
#include "hyperfect/enumerate.hpp"
#include "hyperfect/extremal.hpp"
#include "hyperfect/khg_io.hpp"
#include "hyperfect/ramsey.hpp"
#include "hyperfect/report.hpp"
#include "hyperfect/verify.hpp"

using namespace hyperfect;

namespace {

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kIndeterminate = 3 };

struct Globals {
  int jobs = default_jobs();
  std::uint64_t budget = default_node_budget();
  bool strict = false;
  bool iso = true;
  std::string format = "json";
};

KHypergraph read_input(const std::string& path) {
  if (path == "-") return parse_khg(std::cin);
  return read_khg_file(path);
}

Graph read_graph(const std::string& path) {
  auto h = read_input(path);
  if (h.k() != 2) throw std::invalid_argument("expected a graph (k = 2), got k = " + std::to_string(h.k()));
  return Graph(h);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int value = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad integer list: " + text);
    out.push_back(value);
  }
  return out;
}

int emit_json(const nlohmann::json& j) {
  std::cout << j.dump(2) << '\n';
  return kOk;
}

struct GenerateArgs {
  int n = 6;
  int k = 3;
  int r = 3;
  std::string input = "-";
  std::string sectors;
  std::string kind = "b";
  std::string switch_set;
};

KHypergraph generate(const std::string& what, const GenerateArgs& a, nlohmann::json* report) {
  if (what == "turan") return turan_construction(a.n);
  if (what == "pre-odd-hole") return generate_pre_odd_hole(parse_int_list(a.sectors)).graph.hypergraph();
  if (what == "cone") return cone(read_input(a.input));
  if (what == "complete-tripartite") return complete_tripartite(a.n);
  if (what == "intersecting") return intersecting_example(parse_intersecting_kind(a.kind), a.n);
  if (what == "clique-hypergraph") return clique_hypergraph(read_input(a.input), a.r);
  if (what == "co") return co(read_graph(a.input));
  if (what == "complement") return complement(read_input(a.input));
  if (what == "mycielskian") return mycielskian(read_graph(a.input)).hypergraph();
  if (what == "grotzsch") return grotzsch_graph().hypergraph();
  if (what == "petersen") return petersen_graph().hypergraph();
  if (what == "cycle") return cycle_graph(a.n).hypergraph();
  if (what == "complete") return KHypergraph::complete(a.k, a.n);
  if (what == "switching-counterexample") {
    const Graph h = a.input == "grotzsch" ? grotzsch_graph() : a.input == "mycielski-grotzsch" ? mycielskian(grotzsch_graph()) : read_graph(a.input);
    VertexSet set = 0;
    for (int v : parse_int_list(a.switch_set)) {
      if (v < 0 || v >= h.n()) throw std::invalid_argument("switching vertex out of range");
      set |= singleton(v);
    }
    const auto s = switching_counterexample(h, set);
    if (report) {
      *report = {{"schema", 1},         {"v", s.v},           {"link_matches", s.link_matches}, {"omega", s.omega},
                 {"chi", s.chi},        {"hypothesis", s.hypothesis}, {"obstruction", to_json(s.obstruction)}, {"concluded", s.concluded},
                 {"graph", instance_json(s.graph.hypergraph())}};
    }
    return s.graph.hypergraph();
  }
  throw std::invalid_argument("unknown generator: " + what);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of perfectness classes for uniform hypergraphs"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget", g.budget, "search node budget (also HYPERFECT_BUDGET)");
  app.add_flag("--strict", g.strict, "exit 3 when any verdict is indeterminate");
  app.add_option("--format", g.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--iso,!--labeled", g.iso, "isomorphism-reduced enumeration (default)");
  app.fallthrough();

  std::function<int()> action;

  auto* classify_cmd = app.add_subcommand("classify", "classify a .khg file");
  std::string classify_path;
  std::vector<int> r_values;
  classify_cmd->add_option("path", classify_path, ".khg file, - for stdin")->required();
  classify_cmd->add_option("--r", r_values, "HD_r values to check");
  classify_cmd->callback([&] {
    action = [&] {
      ClassifyOptions opts;
      opts.r_values = r_values;
      opts.budget = g.budget;
      opts.jobs = g.jobs;
      const auto report = classify(read_input(classify_path), opts);
      if (g.format == "text") {
        std::cout << to_text(report);
      } else {
        emit_json(to_json(report));
      }
      return g.strict && report.any_indeterminate() ? kIndeterminate : kOk;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "run a theorem verification harness");
  std::string theorem;
  int n_bound = 0;
  bool list = false;
  verify_cmd->add_option("id", theorem, "theorem id");
  verify_cmd->add_option("--n", n_bound, "size bound (default depends on the id)");
  verify_cmd->add_flag("--list", list, "list theorem ids");
  verify_cmd->callback([&] {
    action = [&] {
      if (list || theorem.empty()) {
        for (const auto& id : verify_ids()) std::cout << id << ' ' << default_n_bound(id) << '\n';
        return theorem.empty() && !list ? kParse : kOk;
      }
      VerifyOptions opts;
      opts.n_bound = n_bound;
      opts.jobs = g.jobs;
      opts.budget = g.budget;
      const auto r = verify(theorem, opts);
      if (g.format == "text") {
        std::cout << to_text(r);
      } else {
        emit_json(to_json(r));
      }
      if (r.passed) return kOk;
      return r.partial && r.violations == 0 ? kIndeterminate : kFailure;
    };
  });

  auto* gen_cmd = app.add_subcommand("generate", "write a generated instance as .khg");
  std::string what;
  GenerateArgs ga;
  gen_cmd->add_option("generator", what, "turan, pre-odd-hole, cone, complete-tripartite, intersecting, clique-hypergraph, co, complement, mycielskian, grotzsch, petersen, cycle, complete, switching-counterexample")
      ->required();
  gen_cmd->add_option("--n", ga.n, "vertex count");
  gen_cmd->add_option("--k", ga.k, "uniformity (complete)");
  gen_cmd->add_option("--r", ga.r, "clique size (clique-hypergraph)");
  gen_cmd->add_option("--input", ga.input, "input .khg (- for stdin); switching-counterexample also accepts grotzsch, mycielski-grotzsch");
  gen_cmd->add_option("--sectors", ga.sectors, "comma separated sector sizes");
  gen_cmd->add_option("--kind", ga.kind, "intersecting family: a, b, c, link_triangle, link_star");
  gen_cmd->add_option("--A", ga.switch_set, "comma separated switching set");
  gen_cmd->callback([&] {
    action = [&] {
      nlohmann::json report;
      const auto h = generate(what, ga, &report);
      if (!report.is_null() && g.format == "json" && what == "switching-counterexample") return emit_json(report);
      std::cout << serialize_khg(h);
      return static_cast<int>(kOk);
    };
  });

  auto* enum_cmd = app.add_subcommand("enumerate", "list all k-uniform hypergraphs on n vertices");
  int ek = 3, en = 4;
  enum_cmd->add_option("--k", ek, "uniformity")->check(CLI::Range(1, 64));
  enum_cmd->add_option("--n", en, "vertex count")->check(CLI::Range(0, 64));
  enum_cmd->callback([&] {
    action = [&] {
      EnumerateOptions opts;
      opts.iso_reduce = g.iso;
      const auto all = enumerate(ek, en, opts);
      if (g.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& h : all) out.push_back(instance_json(h));
        return emit_json({{"schema", 1}, {"k", ek}, {"n", en}, {"iso", g.iso}, {"count", all.size()}, {"instances", out}});
      }
      for (std::size_t i = 0; i < all.size(); ++i) std::cout << "# " << i << '\n' << serialize_khg(all[i]);
      return static_cast<int>(kOk);
    };
  });

  auto* ramsey_cmd = app.add_subcommand("ramsey", "look up or brute-force R_s(k)");
  int rs = 2, rk = 3, brute = 0;
  bool external = false;
  ramsey_cmd->add_option("--s", rs, "colors")->check(CLI::PositiveNumber);
  ramsey_cmd->add_option("--k", rk, "uniformity")->check(CLI::Range(2, 64));
  ramsey_cmd->add_option("--brute", brute, "brute force up to this many vertices");
  ramsey_cmd->add_flag("--allow-external", external, "accept literature values");
  ramsey_cmd->callback([&] {
    action = [&] {
      nlohmann::json out = {{"schema", 1}, {"s", rs}, {"k", rk}};
      if (brute > 0) {
        const auto value = brute_force_ramsey(rs, rk, brute);
        out["value"] = value ? nlohmann::json(*value) : nlohmann::json();
        out["provenance"] = value ? "brute_forced" : "unknown";
        out["searched_up_to"] = brute;
      } else {
        const RamseyTable table(external);
        const auto entry = table.lookup(rs, rk);
        out["value"] = entry ? nlohmann::json(entry->value) : nlohmann::json();
        out["provenance"] = entry ? std::string(to_string(entry->provenance)) : "unknown";
      }
      if (g.format == "text") {
        std::cout << "R_" << rs << "(" << rk << ") = " << (out["value"].is_null() ? "unknown" : out["value"].dump()) << " ["
                  << out["provenance"].get<std::string>() << "]\n";
      } else {
        emit_json(out);
      }
      return g.strict && out["value"].is_null() ? kIndeterminate : kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const UnknownTheorem& e) {
    std::cerr << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
