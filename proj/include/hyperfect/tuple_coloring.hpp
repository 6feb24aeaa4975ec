#pragma once

#include <cstdint>
#include <vector>

#include "hyperfect/combinatorics.hpp"

namespace hyperfect {

/// A total coloring of the `arity`-subsets of {0..n-1} with colors in
/// [0, num_colors), indexed by colex rank.
class TupleColoring {
 public:
  TupleColoring(int arity, int n, int num_colors);
  TupleColoring(int arity, int n, int num_colors, std::vector<int> colors);

  int arity() const { return arity_; }
  int n() const { return n_; }
  int num_colors() const { return num_colors_; }
  std::size_t size() const { return colors_.size(); }

  int color(VertexSet tuple) const;
  int color_at(std::uint64_t rank) const { return colors_[rank]; }
  void set(VertexSet tuple, int color);
  const std::vector<int>& colors() const { return colors_; }

  friend bool operator==(const TupleColoring&, const TupleColoring&) = default;

 private:
  int arity_;
  int n_;
  int num_colors_;
  std::vector<int> colors_;
};

}  // namespace hyperfect
