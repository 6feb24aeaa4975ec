#include "hyperfect/parallel.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hyperfect {

std::uint64_t default_node_budget() {
  if (const char* env = std::getenv("HYPERFECT_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("HYPERFECT_BUDGET must be a non-negative integer");
    }
  }
  return 10'000'000;
}

int default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace hyperfect
