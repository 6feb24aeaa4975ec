#pragma once

#include <bit>
#include <cstdint>
#include <type_traits>
#include <vector>

namespace hyperfect {

/// Vertex sets are bitmasks; instances are limited to 64 vertices.
using VertexSet = std::uint64_t;
inline constexpr int kMaxVertices = 64;

constexpr VertexSet singleton(int v) { return VertexSet{1} << v; }
constexpr VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : singleton(n) - 1;
}
constexpr int size_of(VertexSet s) { return std::popcount(s); }
constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }
constexpr int lowest(VertexSet s) { return std::countr_zero(s); }
constexpr int highest(VertexSet s) { return 63 - std::countl_zero(s); }

/// C(n, r); zero outside 0 <= r <= n. Valid for n <= 64.
std::uint64_t binomial(int n, int r);

/// Colex rank of a set among all sets of the same size: sum of C(a_i, i).
std::uint64_t colex_rank(VertexSet s);
VertexSet colex_unrank(std::uint64_t rank, int size);

std::vector<int> members(VertexSet s);
VertexSet make_set(const std::vector<int>& vertices);

/// Maps the i-th smallest element of `universe` to bit i.
VertexSet compress(VertexSet s, VertexSet universe);
/// Inverse of compress.
VertexSet expand(VertexSet s, VertexSet universe);

namespace detail {
template <class Fn, class Arg>
bool invoke_continue(Fn& fn, Arg arg) {
  if constexpr (std::is_same_v<std::invoke_result_t<Fn&, Arg>, bool>) {
    return fn(arg);
  } else {
    fn(arg);
    return true;
  }
}
}  // namespace detail

/// Visits every subset of `universe` with exactly `size` elements, in colex
/// order (which for equal-size sets is increasing bitmask order). A callback
/// returning false stops the walk; the return value reports completion.
template <class Fn>
bool for_each_subset_of_size(VertexSet universe, int size, Fn&& fn) {
  const int m = size_of(universe);
  if (size < 0 || size > m) return true;
  if (size == 0) return detail::invoke_continue(fn, VertexSet{0});
  int pos[64];
  int count = 0;
  for (VertexSet u = universe; u; u &= u - 1) pos[count++] = lowest(u);
  // Gosper's hack over dense positions, deposited into the universe.
  std::uint64_t dense = size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
  const std::uint64_t limit = m == 64 ? 0 : (std::uint64_t{1} << m);
  while (true) {
    VertexSet s = 0;
    for (std::uint64_t d = dense; d; d &= d - 1) s |= singleton(pos[std::countr_zero(d)]);
    if (!detail::invoke_continue(fn, s)) return false;
    const std::uint64_t c = dense & (~dense + 1);
    const std::uint64_t r = dense + c;
    if (r == 0) break;
    dense = (((r ^ dense) >> 2) / c) | r;
    if (limit != 0 && dense >= limit) break;
  }
  return true;
}

/// Visits every subset of `universe` (including the empty set) in increasing
/// bitmask order.
template <class Fn>
bool for_each_subset(VertexSet universe, Fn&& fn) {
  VertexSet s = 0;
  while (true) {
    if (!detail::invoke_continue(fn, s)) return false;
    if (s == universe) break;
    s = ((s | ~universe) + 1) & universe;
  }
  return true;
}

/// Nonempty subsets ordered by size, then colex.
std::vector<VertexSet> subsets_by_size(VertexSet universe, int min_size = 1);

}  // namespace hyperfect
