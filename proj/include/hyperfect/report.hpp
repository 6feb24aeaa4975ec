#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperfect/certificate.hpp"
#include "hyperfect/hypergraph.hpp"
#include "hyperfect/parallel.hpp"

namespace hyperfect {

struct ClassEntry {
  std::string name;
  Certificate certificate;
};

struct ClassificationReport {
  std::string id;
  int n = 0;
  int k = 0;
  std::vector<ClassEntry> classes;

  /// Throws std::out_of_range for an unknown class name.
  const Certificate& at(const std::string& name) const;
  bool has(const std::string& name) const;
  bool any_indeterminate() const;
};

struct ClassifyOptions {
  /// HD_r is reported for each r; empty means {k-1, k}.
  std::vector<int> r_values;
  std::uint64_t budget = default_node_budget();
  int jobs = 1;
};

/// Every class verdict with its certificate, plus `cocycle` for k = 3.
/// Throws std::logic_error when verdicts contradict the implications
/// H_omega => Berge <=> C_omega => clique friendly, doubly = C_omega and
/// C_alpha, H_omega = H and clique friendly.
ClassificationReport classify(const KHypergraph& g, const ClassifyOptions& options = {});

nlohmann::json to_json(const ClassificationReport& r);
std::string to_text(const ClassificationReport& r);

}  // namespace hyperfect
