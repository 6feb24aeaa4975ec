#include "hyperfect/report.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "hyperfect/canonical.hpp"
#include "hyperfect/classifiers.hpp"
#include "hyperfect/cocycles.hpp"
#include "hyperfect/coloring.hpp"
#include "hyperfect/khg_io.hpp"

namespace hyperfect {

const Certificate& ClassificationReport::at(const std::string& name) const {
  for (const auto& c : classes) {
    if (c.name == name) return c.certificate;
  }
  throw std::out_of_range("no class named " + name);
}

bool ClassificationReport::has(const std::string& name) const {
  for (const auto& c : classes) {
    if (c.name == name) return true;
  }
  return false;
}

bool ClassificationReport::any_indeterminate() const {
  for (const auto& c : classes) {
    if (c.certificate.indeterminate()) return true;
  }
  return false;
}

namespace {

Certificate cocycle_certificate(const KHypergraph& g) {
  auto result = is_cocycle(g);
  if (!result) return Certificate::no(SubsetWitness{*result.violation, 0, 0, "4-set spans an odd number of edges"});
  nlohmann::json edges = nlohmann::json::array();
  for (VertexSet e : result.representative->hypergraph().edges()) edges.push_back(members(e));
  return Certificate::yes({}, {{"representative", {{"n", g.n()}, {"edges", edges}}}});
}

void require(bool condition, const char* what) {
  if (!condition) throw std::logic_error(std::string("classification implication violated: ") + what);
}

}  // namespace

ClassificationReport classify(const KHypergraph& g, const ClassifyOptions& options) {
  ClassificationReport report;
  report.id = canonical_form(g).id();
  report.n = g.n();
  report.k = g.k();
  std::vector<int> rs = options.r_values;
  if (rs.empty()) rs = {std::max(1, g.k() - 1), g.k()};

  std::vector<std::pair<std::string, std::function<Certificate()>>> jobs{
      {"clique_friendly", [&] { return is_clique_friendly(g); }},
      {"berge", [&] { return is_berge(g); }},
      {"c_omega", [&] { return is_c_omega_perfect(g); }},
      {"c_alpha", [&] { return is_c_alpha_perfect(g); }},
      {"doubly", [&] { return is_doubly_perfect(g); }},
      {"h_perfect", [&] { return is_h_perfect(g); }},
      {"h_omega", [&] { return is_h_omega_perfect(g); }},
      {"h_alpha", [&] { return is_h_alpha_perfect(g); }},
      {"r_perfect", [&] { return is_r_perfect(g); }},
      {"pc", [&] { return has_pc_property(g); }},
  };
  for (int r : rs) jobs.emplace_back("hd_r" + std::to_string(r), [&g, r, &options] { return has_hd_property(g, r, options.budget); });
  jobs.emplace_back("voloshin", [&] { return is_voloshin_perfect(g); });
  jobs.emplace_back("chi_bound_cover", [&] { return chi_bound_cover(g, options.budget); });
  if (g.k() == 3) jobs.emplace_back("cocycle", [&] { return cocycle_certificate(g); });

  report.classes.resize(jobs.size());
  parallel_for(jobs.size(), options.jobs, [&](std::size_t i) { report.classes[i] = {jobs[i].first, jobs[i].second()}; });

  auto holds = [&](const char* name) { return report.at(name).holds(); };
  require(!holds("h_omega") || holds("berge"), "H_omega-perfect but not Berge");
  require(holds("berge") == holds("c_omega"), "Berge and C_omega-perfect differ");
  require(!holds("c_omega") || holds("clique_friendly"), "C_omega-perfect but not clique friendly");
  require(holds("doubly") == (holds("c_omega") && holds("c_alpha")), "doubly perfect differs from C_omega and C_alpha");
  require(holds("h_omega") == (holds("h_perfect") && holds("clique_friendly")), "H_omega differs from H and clique friendly");
  return report;
}

nlohmann::json to_json(const ClassificationReport& r) {
  nlohmann::json classes = nlohmann::json::object();
  for (const auto& c : r.classes) classes[c.name] = to_json(c.certificate);
  return {{"schema", 1}, {"id", r.id}, {"n", r.n}, {"k", r.k}, {"classes", classes}};
}

std::string to_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "id " << r.id << "\nn " << r.n << "\nk " << r.k << '\n';
  for (const auto& c : r.classes) {
    const auto v = verdict_json(c.certificate.verdict);
    out << c.name << ' ' << (v.is_boolean() ? (v.get<bool>() ? "true" : "false") : v.get<std::string>()) << '\n';
  }
  return out.str();
}

}  // namespace hyperfect
