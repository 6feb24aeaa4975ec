#include "hyperfect/hypergraph.hpp"

#include <stdexcept>
#include <string>

namespace hyperfect {
namespace {

std::size_t word_count(std::uint64_t slots) { return static_cast<std::size_t>((slots + 63) / 64); }

void check_shape(int k, int n) {
  if (k < 1) throw std::invalid_argument("uniformity must be >= 1");
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count must be in [0, 64]");
}

void set_bit(KHypergraph::Bits& bits, std::uint64_t rank) { bits[rank >> 6] |= std::uint64_t{1} << (rank & 63); }

}  // namespace

KHypergraph::KHypergraph(int k, int n) : k_(k), n_(n), slots_(0) {
  check_shape(k, n);
  slots_ = binomial(n, k);
  bits_.assign(word_count(slots_), 0);
}

KHypergraph::KHypergraph(int k, int n, Bits bits) : k_(k), n_(n), slots_(0), bits_(std::move(bits)) {
  check_shape(k, n);
  slots_ = binomial(n, k);
  if (bits_.size() != word_count(slots_)) throw std::invalid_argument("edge bitset has wrong length");
  if (slots_ % 64 != 0 && !bits_.empty()) {
    const std::uint64_t tail = ~((std::uint64_t{1} << (slots_ % 64)) - 1);
    if (bits_.back() & tail) throw std::invalid_argument("edge bitset has bits beyond C(n, k)");
  }
}

KHypergraph KHypergraph::from_edges(int k, int n, std::span<const VertexSet> edges) {
  EdgeSetBuilder builder(k, n);
  for (VertexSet e : edges) {
    if (builder.has(e)) throw std::invalid_argument("duplicate edge");
    builder.add(e);
  }
  return builder.build();
}

KHypergraph KHypergraph::from_edges(int k, int n, const std::vector<std::vector<int>>& edges) {
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (const auto& e : edges) {
    for (int v : e) {
      if (v < 0 || v >= n) throw std::invalid_argument("edge vertex " + std::to_string(v) + " out of range");
    }
    sets.push_back(make_set(e));
    if (size_of(sets.back()) != static_cast<int>(e.size())) throw std::invalid_argument("edge repeats a vertex");
  }
  return from_edges(k, n, sets);
}

KHypergraph KHypergraph::complete(int k, int n) { return complement(KHypergraph(k, n)); }

bool KHypergraph::has_edge(VertexSet e) const {
  if (size_of(e) != k_ || (e & ~vertices()) != 0) return false;
  return has_edge_rank(colex_rank(e));
}

std::size_t KHypergraph::edge_count() const {
  std::size_t count = 0;
  for (auto w : bits_) count += std::popcount(w);
  return count;
}

std::vector<VertexSet> KHypergraph::edges() const {
  std::vector<VertexSet> out;
  out.reserve(edge_count());
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    for (auto word = bits_[w]; word; word &= word - 1) {
      out.push_back(colex_unrank(w * 64 + std::countr_zero(word), k_));
    }
  }
  return out;
}

EdgeSetBuilder::EdgeSetBuilder(int k, int n) : k_(k), n_(n) {
  check_shape(k, n);
  bits_.assign(word_count(binomial(n, k)), 0);
}

std::uint64_t EdgeSetBuilder::checked_rank(VertexSet e) const {
  if (size_of(e) != k_) throw std::invalid_argument("edge has " + std::to_string(size_of(e)) + " vertices, expected " + std::to_string(k_));
  if ((e & ~full_set(n_)) != 0) throw std::invalid_argument("edge vertex out of range");
  return colex_rank(e);
}

void EdgeSetBuilder::add(VertexSet e) { set_bit(bits_, checked_rank(e)); }

void EdgeSetBuilder::add(std::initializer_list<int> e) {
  VertexSet s = 0;
  for (int v : e) {
    if (v < 0 || v >= n_) throw std::invalid_argument("edge vertex out of range");
    s |= singleton(v);
  }
  add(s);
}

void EdgeSetBuilder::remove(VertexSet e) {
  const auto r = checked_rank(e);
  bits_[r >> 6] &= ~(std::uint64_t{1} << (r & 63));
}

bool EdgeSetBuilder::has(VertexSet e) const {
  const auto r = checked_rank(e);
  return (bits_[r >> 6] >> (r & 63)) & 1U;
}

KHypergraph complement(const KHypergraph& g) {
  auto bits = g.bits();
  for (auto& w : bits) w = ~w;
  if (g.slot_count() % 64 != 0 && !bits.empty()) bits.back() &= (std::uint64_t{1} << (g.slot_count() % 64)) - 1;
  return KHypergraph(g.k(), g.n(), std::move(bits));
}

KHypergraph induced(const KHypergraph& g, VertexSet subset) {
  if ((subset & ~g.vertices()) != 0) throw std::out_of_range("induced: vertex outside the hypergraph");
  const int m = size_of(subset);
  KHypergraph::Bits bits(word_count(binomial(m, g.k())), 0);
  for_each_subset_of_size(subset, g.k(), [&](VertexSet e) {
    if (g.has_edge_rank(colex_rank(e))) set_bit(bits, colex_rank(compress(e, subset)));
  });
  return KHypergraph(g.k(), m, std::move(bits));
}

KHypergraph link(const KHypergraph& g, VertexSet x) {
  if ((x & ~g.vertices()) != 0) throw std::out_of_range("link: vertex outside the hypergraph");
  const int size = size_of(x);
  if (size >= g.k()) throw std::invalid_argument("link: |X| must be smaller than k");
  const VertexSet rest = g.vertices() & ~x;
  const int k = g.k() - size;
  KHypergraph::Bits bits(word_count(binomial(size_of(rest), k)), 0);
  for_each_subset_of_size(rest, k, [&](VertexSet y) {
    if (g.has_edge_rank(colex_rank(x | y))) set_bit(bits, colex_rank(compress(y, rest)));
  });
  return KHypergraph(k, size_of(rest), std::move(bits));
}

bool is_clique(const KHypergraph& g, VertexSet s) {
  return for_each_subset_of_size(s, g.k(), [&](VertexSet e) { return g.has_edge_rank(colex_rank(e)); });
}

namespace {

struct CliqueSearch {
  const KHypergraph& g;
  std::vector<VertexSet> adj;  // graphs only
  int best = -1;
  VertexSet best_set = 0;

  explicit CliqueSearch(const KHypergraph& h) : g(h) {
    if (g.k() == 2) {
      adj.assign(g.n(), 0);
      for (VertexSet e : g.edges()) {
        adj[lowest(e)] |= singleton(highest(e));
        adj[highest(e)] |= singleton(lowest(e));
      }
    }
  }

  VertexSet filter(VertexSet s, int v, VertexSet cand) const {
    if (g.k() == 1) return cand;
    if (g.k() == 2) return cand & adj[v];
    if (size_of(s) < g.k() - 2) return cand;
    VertexSet out = 0;
    for (VertexSet c = cand; c; c &= c - 1) {
      const int u = lowest(c);
      const VertexSet pair = singleton(v) | singleton(u);
      const bool ok = for_each_subset_of_size(s, g.k() - 2, [&](VertexSet t) { return g.has_edge_rank(colex_rank(t | pair)); });
      if (ok) out |= singleton(u);
    }
    return out;
  }

  void extend(VertexSet s, VertexSet cand) {
    if (size_of(s) > best) {
      best = size_of(s);
      best_set = s;
    }
    while (cand) {
      if (size_of(s) + size_of(cand) <= best) return;
      const int v = lowest(cand);
      cand &= cand - 1;
      extend(s | singleton(v), filter(s, v, cand));
    }
  }
};

}  // namespace

VertexSet maximum_clique(const KHypergraph& g) {
  CliqueSearch search(g);
  if (g.k() == 1) {
    // A 1-uniform clique is any set of edges (vertices); size<1 is vacuous.
    VertexSet s = 0;
    for (VertexSet e : g.edges()) s |= e;
    return s;
  }
  search.extend(0, g.vertices());
  return search.best_set;
}

int clique_number(const KHypergraph& g) { return size_of(maximum_clique(g)); }

int independence_number(const KHypergraph& g) { return clique_number(complement(g)); }

std::vector<int> degrees(const KHypergraph& g) {
  std::vector<int> deg(g.n(), 0);
  for (VertexSet e : g.edges()) {
    for (VertexSet s = e; s; s &= s - 1) ++deg[lowest(s)];
  }
  return deg;
}

KHypergraph disjoint_union(const KHypergraph& g1, const KHypergraph& g2) {
  if (g1.k() != g2.k()) throw std::invalid_argument("disjoint_union: uniformity mismatch");
  EdgeSetBuilder builder(g1.k(), g1.n() + g2.n());
  for (VertexSet e : g1.edges()) builder.add(e);
  for (VertexSet e : g2.edges()) builder.add(e << g1.n());
  return builder.build();
}

KHypergraph relabel(const KHypergraph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw std::invalid_argument("relabel: permutation has wrong size");
  VertexSet image_of_all = 0;
  for (int p : perm) {
    if (p < 0 || p >= g.n()) throw std::invalid_argument("relabel: image out of range");
    image_of_all |= singleton(p);
  }
  if (image_of_all != g.vertices()) throw std::invalid_argument("relabel: not a permutation");
  EdgeSetBuilder builder(g.k(), g.n());
  for (VertexSet e : g.edges()) {
    VertexSet image = 0;
    for (VertexSet s = e; s; s &= s - 1) image |= singleton(perm[lowest(s)]);
    builder.add(image);
  }
  return builder.build();
}

}  // namespace hyperfect
