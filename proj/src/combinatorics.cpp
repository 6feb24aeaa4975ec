#include "hyperfect/combinatorics.hpp"

#include <array>
#include <stdexcept>

namespace hyperfect {
namespace {

struct BinomialTable {
  std::array<std::array<std::uint64_t, 65>, 65> value{};
  BinomialTable() {
    for (int n = 0; n <= 64; ++n) {
      value[n][0] = 1;
      for (int r = 1; r <= n; ++r) value[n][r] = value[n - 1][r - 1] + (r < n ? value[n - 1][r] : 0);
    }
  }
};

const BinomialTable& table() {
  static const BinomialTable t;
  return t;
}

}  // namespace

std::uint64_t binomial(int n, int r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (n > 64) throw std::out_of_range("binomial: n > 64");
  return table().value[n][r];
}

std::uint64_t colex_rank(VertexSet s) {
  std::uint64_t rank = 0;
  int i = 1;
  for (; s; s &= s - 1, ++i) rank += binomial(lowest(s), i);
  return rank;
}

VertexSet colex_unrank(std::uint64_t rank, int size) {
  VertexSet s = 0;
  for (int i = size; i >= 1; --i) {
    int a = i - 1;
    while (binomial(a + 1, i) <= rank) ++a;
    rank -= binomial(a, i);
    s |= singleton(a);
  }
  return s;
}

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(size_of(s));
  for (; s; s &= s - 1) out.push_back(lowest(s));
  return out;
}

VertexSet make_set(const std::vector<int>& vertices) {
  VertexSet s = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw std::out_of_range("vertex index out of range");
    s |= singleton(v);
  }
  return s;
}

VertexSet compress(VertexSet s, VertexSet universe) {
  VertexSet out = 0;
  int i = 0;
  for (VertexSet u = universe; u; u &= u - 1, ++i) {
    if (s & (u & (~u + 1))) out |= singleton(i);
  }
  return out;
}

VertexSet expand(VertexSet s, VertexSet universe) {
  VertexSet out = 0;
  int i = 0;
  for (VertexSet u = universe; u; u &= u - 1, ++i) {
    if (contains(s, i)) out |= u & (~u + 1);
  }
  return out;
}

std::vector<VertexSet> subsets_by_size(VertexSet universe, int min_size) {
  std::vector<VertexSet> out;
  for (int size = min_size; size <= size_of(universe); ++size) {
    for_each_subset_of_size(universe, size, [&](VertexSet s) { out.push_back(s); });
  }
  return out;
}

}  // namespace hyperfect
