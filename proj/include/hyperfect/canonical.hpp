#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hyperfect/hypergraph.hpp"

namespace hyperfect {

/// Isomorphism-invariant key: the lexicographically smallest colex edge
/// bitset over all relabelings that respect an invariant vertex-refinement
/// order. Two hypergraphs share a key iff they are isomorphic.
struct CanonicalForm {
  int k = 0;
  int n = 0;
  KHypergraph::Bits bits;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

  /// "k<k>n<n>:" followed by the bitset as hex, most significant word first.
  std::string id() const;
  KHypergraph representative() const { return KHypergraph(k, n, bits); }
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& c) const noexcept;
};

CanonicalForm canonical_form(const KHypergraph& g);

/// Canonical form plus the labeling realizing it (vertex v -> perm[v]).
struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<int> perm;
};
CanonicalLabeling canonical_labeling(const KHypergraph& g);

bool are_isomorphic(const KHypergraph& a, const KHypergraph& b);

}  // namespace hyperfect
