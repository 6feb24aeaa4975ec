#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "hyperfect/hypergraph.hpp"

namespace hyperfect {

struct EnumerationTooLarge : std::length_error {
  using std::length_error::length_error;
};

struct EnumerateOptions {
  bool iso_reduce = true;
  /// Largest C(n, k) accepted; 2^C(n, k) labeled instances are walked.
  int max_labeled_slots = 24;
  /// Largest C(n, k) accepted for isomorphism-reduced generation.
  int max_iso_slots = 28;
};

/// Calls `fn` on every labeled k-uniform hypergraph on n vertices, in
/// increasing order of the colex edge bitset read as a binary number.
void for_each_labeled(int k, int n, const std::function<void(const KHypergraph&)>& fn,
                      int max_slots = EnumerateOptions{}.max_labeled_slots);

/// One canonical representative per isomorphism class, sorted by edge count
/// and then by edge bitset.
std::vector<KHypergraph> enumerate_iso(int k, int n, int max_slots = EnumerateOptions{}.max_iso_slots);

/// Materialized enumeration (labeled or isomorphism-reduced).
std::vector<KHypergraph> enumerate(int k, int n, const EnumerateOptions& options = {});

/// Isomorphism-reduced graphs on exactly n vertices.
std::vector<KHypergraph> enumerate_graphs(int n);

}  // namespace hyperfect
