// A Universe is an immutable, ordered carrier of distinct element names.
// Posets, semilattices and vectors all index into a shared Universe, and
// operations refuse to mix carriers (same object or same name sequence).

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace semialg {

using Index = std::uint32_t;

class Universe {
 public:
  explicit Universe(std::vector<std::string> names) : names_(std::move(names)) {
    index_.reserve(names_.size());
    for (Index i = 0; i < size(); ++i) {
      if (names_[i].empty()) {
        throw ValidationError("element names must be nonempty");
      }
      if (!index_.emplace(names_[i], i).second) {
        throw DuplicateElementError("duplicate element name: " + names_[i]);
      }
    }
  }

  Index size() const noexcept { return static_cast<Index>(names_.size()); }

  const std::string& name(Index i) const { return names_.at(i); }

  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Index> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Index require(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw UnknownElementError("unknown element: " + std::string(name));
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Index> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

inline UniversePtr make_universe(std::vector<std::string> names) {
  return std::make_shared<const Universe>(std::move(names));
}

/// Carriers are compatible when they are the same object or list the same
/// names in the same order.
inline bool same_carrier(const UniversePtr& a, const UniversePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->names() == b->names();
}

inline void require_same_carrier(const UniversePtr& a, const UniversePtr& b) {
  if (!same_carrier(a, b)) {
    throw CarrierMismatchError("operands live over different carriers");
  }
}

}  // namespace semialg
