#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperfect/hypergraph.hpp"
#include "hyperfect/parallel.hpp"

namespace hyperfect {

struct UnknownTheorem : std::invalid_argument {
  explicit UnknownTheorem(const std::string& id) : std::invalid_argument("unknown theorem id: " + id) {}
};

struct VerifyOptions {
  /// 0 selects the per-theorem default.
  int n_bound = 0;
  int jobs = default_jobs();
  std::uint64_t budget = default_node_budget();
};

struct VerifyResult {
  std::string id;
  int n_bound = 0;
  bool passed = false;
  /// Some instance ran out of budget or hit an unknown Ramsey value.
  bool partial = false;
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  nlohmann::json counterexamples = nlohmann::json::array();
  nlohmann::json details = nlohmann::json::object();
};

const std::vector<std::string>& verify_ids();
int default_n_bound(const std::string& id);

/// Deterministic for a given (id, n_bound): the worker count only changes
/// wall time.
VerifyResult verify(const std::string& id, const VerifyOptions& options = {});

nlohmann::json to_json(const VerifyResult& r);
std::string to_text(const VerifyResult& r);

/// {"n", "k", "edges"} with edges as sorted vertex lists.
nlohmann::json instance_json(const KHypergraph& g);

/// Graphs on 1..nb vertices, then k=3 and k=4 hypergraphs on k..nb
/// vertices: labeled while C(n,k) <= 10, isomorphism-reduced up to the
/// enumeration guard.
std::vector<KHypergraph> standard_corpus(int nb);
std::vector<KHypergraph> uniform_corpus(int k, int nb);
std::vector<KHypergraph> graph_corpus(int nb);

}  // namespace hyperfect
