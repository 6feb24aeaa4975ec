#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "hyperfect/tuple_coloring.hpp"

namespace hyperfect {

enum class RamseyProvenance { kClosedForm, kBruteForced, kExternal, kUnknown };

std::string_view to_string(RamseyProvenance p);

struct RamseyEntry {
  int value = 0;
  RamseyProvenance provenance = RamseyProvenance::kUnknown;
  /// For brute-forced entries: largest n for which all colorings were checked.
  int verified_bound = 0;
};

/// Thrown by callers that need an R_s(k) the table does not know.
class RamseyUnknown : public std::runtime_error {
 public:
  RamseyUnknown(int s, int k);
  int s() const { return s_; }
  int k() const { return k_; }

 private:
  int s_;
  int k_;
};

/// Outcome of an exhaustive scan of all s-colorings of the (k-1)-subsets of [n].
struct RamseyScan {
  /// Every coloring contains a monochromatic K_k^{k-1}.
  bool forced = false;
  /// A coloring with no monochromatic K_k^{k-1} when one exists.
  std::optional<TupleColoring> witness;
  std::uint64_t colorings_checked = 0;
};

RamseyScan ramsey_scan(int s, int k, int n);

/// True when the coloring has no k-set whose (k-1)-subsets are all one color.
bool has_monochromatic_clique(const TupleColoring& c, int k);

/// Smallest n <= n_max for which every coloring is forced, found by scanning
/// n = 1, 2, ... . nullopt when n_max is reached first.
std::optional<int> brute_force_ramsey(int s, int k, int n_max);

/// Known values of R_s(k). R_s(2) = s+1 and R_1(k) = k are closed forms;
/// R_1(3) and R_2(3) are established by brute force when the table is built;
/// R_3(3) = 17 is external and only present when explicitly enabled.
class RamseyTable {
 public:
  explicit RamseyTable(bool allow_external = false);

  std::optional<RamseyEntry> lookup(int s, int k) const;
  std::optional<int> value(int s, int k) const;
  /// Like value() but throws RamseyUnknown.
  int require(int s, int k) const;

  static const RamseyTable& standard();

 private:
  std::map<std::pair<int, int>, RamseyEntry> entries_;
};

/// R_s(k) from the standard table (external values disabled).
std::optional<int> ramsey_number(int s, int k);

}  // namespace hyperfect
