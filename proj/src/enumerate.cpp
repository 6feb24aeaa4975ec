#include "hyperfect/enumerate.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "hyperfect/canonical.hpp"

namespace hyperfect {
namespace {

void check_args(int k, int n) {
  if (k < 2) throw std::invalid_argument("enumerate: k must be >= 2");
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("enumerate: n out of range");
}

bool bits_less(const KHypergraph::Bits& a, const KHypergraph::Bits& b) {
  // Numeric order of the bitsets: most significant word first.
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace

void for_each_labeled(int k, int n, const std::function<void(const KHypergraph&)>& fn, int max_slots) {
  check_args(k, n);
  const auto slots = binomial(n, k);
  if (slots > static_cast<std::uint64_t>(max_slots)) {
    throw EnumerationTooLarge("enumerate: 2^" + std::to_string(slots) + " labeled instances exceeds the size guard");
  }
  const std::uint64_t total = std::uint64_t{1} << slots;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    KHypergraph::Bits bits(slots == 0 ? 0 : 1, mask);
    fn(KHypergraph(k, n, std::move(bits)));
  }
}

std::vector<KHypergraph> enumerate_iso(int k, int n, int max_slots) {
  check_args(k, n);
  const auto slots = binomial(n, k);
  if (slots > static_cast<std::uint64_t>(max_slots)) {
    throw EnumerationTooLarge("enumerate: C(n,k) = " + std::to_string(slots) + " exceeds the isomorphism-reduced size guard");
  }
  // Canonical augmentation one edge at a time; each level holds the classes
  // with exactly m edges.
  std::vector<CanonicalForm> level{canonical_form(KHypergraph(k, n))};
  std::vector<KHypergraph> out{level.front().representative()};
  for (std::uint64_t m = 1; m <= slots; ++m) {
    std::unordered_set<CanonicalForm, CanonicalFormHash> next;
    for (const auto& form : level) {
      for (std::uint64_t r = 0; r < slots; ++r) {
        if ((form.bits[r >> 6] >> (r & 63)) & 1U) continue;
        auto bits = form.bits;
        bits[r >> 6] |= std::uint64_t{1} << (r & 63);
        next.insert(canonical_form(KHypergraph(k, n, std::move(bits))));
      }
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) { return bits_less(a.bits, b.bits); });
    for (const auto& form : level) out.push_back(form.representative());
  }
  return out;
}

std::vector<KHypergraph> enumerate(int k, int n, const EnumerateOptions& options) {
  if (options.iso_reduce) return enumerate_iso(k, n, options.max_iso_slots);
  std::vector<KHypergraph> out;
  for_each_labeled(k, n, [&](const KHypergraph& g) { out.push_back(g); }, options.max_labeled_slots);
  return out;
}

std::vector<KHypergraph> enumerate_graphs(int n) { return enumerate_iso(2, n); }

}  // namespace hyperfect
