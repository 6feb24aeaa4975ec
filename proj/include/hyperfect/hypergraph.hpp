#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hyperfect/combinatorics.hpp"

namespace hyperfect {

/// A k-uniform hypergraph on vertices 0..n-1.
///
/// Edges are stored as a bitset indexed by the colex rank of each k-subset, so
/// membership is a rank computation plus a bit test. Instances are immutable
/// after construction and can be shared freely between threads.
class KHypergraph {
 public:
  using Bits = std::vector<std::uint64_t>;

  /// Edgeless hypergraph. Uniformity may be 1 so that links of (k-1)-sets
  /// are representable; everything else in the library expects k >= 2.
  KHypergraph(int k, int n);

  /// Takes ownership of a colex-indexed edge bitset of C(n, k) bits.
  KHypergraph(int k, int n, Bits bits);

  /// Throws std::invalid_argument on a malformed or duplicate edge.
  static KHypergraph from_edges(int k, int n, std::span<const VertexSet> edges);
  static KHypergraph from_edges(int k, int n, const std::vector<std::vector<int>>& edges);
  static KHypergraph complete(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  VertexSet vertices() const { return full_set(n_); }
  std::uint64_t slot_count() const { return slots_; }

  bool has_edge(VertexSet e) const;
  bool has_edge_rank(std::uint64_t rank) const { return (bits_[rank >> 6] >> (rank & 63)) & 1U; }
  std::size_t edge_count() const;
  bool is_complete() const { return edge_count() == slots_; }
  bool is_empty() const { return edge_count() == 0; }

  /// Edges in colex order.
  std::vector<VertexSet> edges() const;
  const Bits& bits() const { return bits_; }

  friend bool operator==(const KHypergraph&, const KHypergraph&) = default;

 private:
  int k_;
  int n_;
  std::uint64_t slots_;
  Bits bits_;
};

/// Mutable edge-set accumulator used by the generators.
class EdgeSetBuilder {
 public:
  EdgeSetBuilder(int k, int n);
  void add(VertexSet e);
  void add(std::initializer_list<int> e);
  void remove(VertexSet e);
  bool has(VertexSet e) const;
  int k() const { return k_; }
  int n() const { return n_; }
  KHypergraph build() const { return KHypergraph(k_, n_, bits_); }

 private:
  std::uint64_t checked_rank(VertexSet e) const;
  int k_;
  int n_;
  KHypergraph::Bits bits_;
};

KHypergraph complement(const KHypergraph& g);

/// Induced subhypergraph on `subset`, vertices relabeled by rank within it.
KHypergraph induced(const KHypergraph& g, VertexSet subset);

/// The (k-|X|)-uniform link of X on V \ X, vertices relabeled by rank.
/// Requires |X| < k.
KHypergraph link(const KHypergraph& g, VertexSet x);

/// True when every k-subset of `s` is an edge (vacuous for |s| < k).
bool is_clique(const KHypergraph& g, VertexSet s);

/// Maximum clique size. Any set of fewer than k vertices counts as a clique,
/// so the result is at least min(n, k-1).
int clique_number(const KHypergraph& g);
/// A maximum clique; ties broken towards the colex-smallest search path.
VertexSet maximum_clique(const KHypergraph& g);
int independence_number(const KHypergraph& g);

/// Degree of every vertex (number of edges containing it).
std::vector<int> degrees(const KHypergraph& g);

/// Vertex-disjoint union; the second operand is shifted by g1.n().
KHypergraph disjoint_union(const KHypergraph& g1, const KHypergraph& g2);

/// Applies a vertex relabeling: vertex v of g becomes perm[v].
KHypergraph relabel(const KHypergraph& g, std::span<const int> perm);

}  // namespace hyperfect
