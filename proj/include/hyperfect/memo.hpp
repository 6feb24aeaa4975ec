#pragma once

#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "hyperfect/canonical.hpp"

namespace hyperfect {

/// Insert-only verdict table keyed by canonical form, safe for concurrent use.
template <class Value>
class CanonicalMemo {
 public:
  std::optional<Value> find(const CanonicalForm& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const CanonicalForm& key, Value value) {
    std::unique_lock lock(mutex_);
    map_.emplace(key, std::move(value));
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<CanonicalForm, Value, CanonicalFormHash> map_;
};

}  // namespace hyperfect
