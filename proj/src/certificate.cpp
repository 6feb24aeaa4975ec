#include "hyperfect/certificate.hpp"

namespace hyperfect {

nlohmann::json verdict_json(Verdict v) {
  switch (v) {
    case Verdict::kTrue:
      return true;
    case Verdict::kFalse:
      return false;
    case Verdict::kIndeterminate:
      break;
  }
  return "indeterminate";
}

nlohmann::json to_json(const TupleColoring& c) {
  nlohmann::json tuples = nlohmann::json::array();
  for (std::uint64_t r = 0; r < c.size(); ++r) {
    auto row = nlohmann::json(members(colex_unrank(r, c.arity())));
    row.push_back(c.color_at(r));
    tuples.push_back(std::move(row));
  }
  return {{"type", "coloring"}, {"arity", c.arity()}, {"n", c.n()}, {"colors", c.num_colors()}, {"tuples", std::move(tuples)}};
}

namespace {

struct WitnessJson {
  nlohmann::json operator()(std::monostate) const { return nullptr; }
  nlohmann::json operator()(const TupleColoring& c) const { return to_json(c); }
  nlohmann::json operator()(const SubsetWitness& w) const {
    return {{"type", "subset"}, {"subset", members(w.subset)}, {"X", members(w.fixed)}, {"colors", w.colors}, {"reason", w.reason}};
  }
  nlohmann::json operator()(const StructureWitness& w) const {
    nlohmann::json j{{"type", w.kind}, {"sequence", w.sequence}};
    if (w.center >= 0) j["center"] = w.center;
    return j;
  }
};

}  // namespace

nlohmann::json to_json(const Witness& w) { return std::visit(WitnessJson{}, w); }

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j{{"verdict", verdict_json(c.verdict)}, {"witness", to_json(c.witness)}};
  if (!c.detail.is_null()) j["detail"] = c.detail;
  return j;
}

}  // namespace hyperfect
