#include "hyperfect/tuple_coloring.hpp"

#include <stdexcept>

namespace hyperfect {

TupleColoring::TupleColoring(int arity, int n, int num_colors)
    : TupleColoring(arity, n, num_colors, std::vector<int>(binomial(n, arity), 0)) {}

TupleColoring::TupleColoring(int arity, int n, int num_colors, std::vector<int> colors)
    : arity_(arity), n_(n), num_colors_(num_colors), colors_(std::move(colors)) {
  if (arity < 0 || n < 0 || n > kMaxVertices) throw std::invalid_argument("TupleColoring: bad shape");
  if (num_colors < 1 && !colors_.empty()) throw std::invalid_argument("TupleColoring: needs at least one color");
  if (colors_.size() != binomial(n, arity)) throw std::invalid_argument("TupleColoring: must color every tuple");
  for (int c : colors_) {
    if (c < 0 || c >= num_colors_) throw std::invalid_argument("TupleColoring: color index out of range");
  }
}

int TupleColoring::color(VertexSet tuple) const {
  if (size_of(tuple) != arity_ || (tuple & ~full_set(n_)) != 0) throw std::invalid_argument("TupleColoring: not a tuple of this coloring");
  return colors_[colex_rank(tuple)];
}

void TupleColoring::set(VertexSet tuple, int color) {
  if (size_of(tuple) != arity_ || (tuple & ~full_set(n_)) != 0) throw std::invalid_argument("TupleColoring: not a tuple of this coloring");
  if (color < 0 || color >= num_colors_) throw std::invalid_argument("TupleColoring: color index out of range");
  colors_[colex_rank(tuple)] = color;
}

}  // namespace hyperfect
