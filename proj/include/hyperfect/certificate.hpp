#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hyperfect/combinatorics.hpp"
#include "hyperfect/tuple_coloring.hpp"

namespace hyperfect {

enum class Verdict { kFalse, kTrue, kIndeterminate };

/// A violating induced vertex set, the fixed set X, and the color count
/// that could not be met.
struct SubsetWitness {
  VertexSet subset = 0;
  VertexSet fixed = 0;
  int colors = 0;
  std::string reason;
};

/// A vertex sequence (hole, antihole, sector layout) with an optional
/// center or anticenter vertex.
struct StructureWitness {
  std::string kind;
  std::vector<int> sequence;
  int center = -1;
};

using Witness = std::variant<std::monostate, TupleColoring, SubsetWitness, StructureWitness>;

/// A verdict together with a re-checkable witness. Negative verdicts for
/// universally quantified properties always carry a concrete violation.
struct Certificate {
  Verdict verdict = Verdict::kIndeterminate;
  Witness witness;
  /// Free-form structured extras (nested certificates, parameters).
  nlohmann::json detail;

  bool holds() const { return verdict == Verdict::kTrue; }
  bool fails() const { return verdict == Verdict::kFalse; }
  bool indeterminate() const { return verdict == Verdict::kIndeterminate; }

  static Certificate yes(Witness w = {}, nlohmann::json detail = {}) { return {Verdict::kTrue, std::move(w), std::move(detail)}; }
  static Certificate no(Witness w, nlohmann::json detail = {}) { return {Verdict::kFalse, std::move(w), std::move(detail)}; }
  static Certificate unknown(std::string why) { return {Verdict::kIndeterminate, {}, nlohmann::json{{"reason", std::move(why)}}}; }
};

nlohmann::json to_json(const TupleColoring& c);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const Certificate& c);
nlohmann::json verdict_json(Verdict v);

}  // namespace hyperfect
