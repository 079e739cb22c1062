// Finite groups by multiplication table, with the small built-in families
// used as Clifford components. Local names are what an element is called
// inside its component; the identity's local name is "e" by convention
// and gets replaced by the component's idempotent name on embedding.

#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "universe.hpp"

namespace semialg {

class FiniteGroup {
 public:
  static FiniteGroup trivial() { return cyclic(1); }

  static FiniteGroup cyclic(Index k) {
    if (k < 1) throw ValidationError("cyclic group order must be positive");
    std::vector<std::string> names;
    names.reserve(k);
    names.emplace_back("e");
    for (Index i = 1; i < k; ++i) names.push_back("g" + std::to_string(i));
    std::vector<Index> table(static_cast<std::size_t>(k) * k);
    for (Index a = 0; a < k; ++a) {
      for (Index b = 0; b < k; ++b) {
        table[static_cast<std::size_t>(a) * k + b] = (a + b) % k;
      }
    }
    return FiniteGroup(std::move(names), std::move(table));
  }

  /// All permutations of k points in lexicographic one-line order; the
  /// name records the one-line form, e.g. "p132". Orders above 5 are
  /// rejected to keep tables sane.
  static FiniteGroup symmetric(Index k) {
    if (k < 1 || k > 5) {
      throw ValidationError("symmetric group degree must be in 1..5");
    }
    std::vector<std::vector<Index>> perms;
    std::vector<Index> base(k);
    std::iota(base.begin(), base.end(), Index{0});
    do {
      perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    const Index m = static_cast<Index>(perms.size());
    std::vector<std::string> names;
    names.reserve(m);
    for (Index i = 0; i < m; ++i) {
      if (i == 0) {
        names.emplace_back("e");
        continue;
      }
      std::string s = "p";
      for (Index v : perms[i]) s += std::to_string(v + 1);
      names.push_back(std::move(s));
    }
    std::vector<Index> table(static_cast<std::size_t>(m) * m);
    std::vector<Index> composed(k);
    for (Index a = 0; a < m; ++a) {
      for (Index b = 0; b < m; ++b) {
        for (Index i = 0; i < k; ++i) composed[i] = perms[a][perms[b][i]];
        const auto it = std::find(perms.begin(), perms.end(), composed);
        table[static_cast<std::size_t>(a) * m + b] =
            static_cast<Index>(it - perms.begin());
      }
    }
    return FiniteGroup(std::move(names), std::move(table));
  }

  /// Validates the group axioms exhaustively; throws ValidationError with
  /// the reason on failure.
  FiniteGroup(std::vector<std::string> local_names, std::vector<Index> table)
      : names_(std::move(local_names)), table_(std::move(table)) {
    const Index k = size();
    if (k == 0) throw ValidationError("group must be nonempty");
    if (table_.size() != static_cast<std::size_t>(k) * k) {
      throw ValidationError("group table size does not match element count");
    }
    for (Index v : table_) {
      if (v >= k) throw ValidationError("group table entry out of range");
    }
    for (Index i = 0; i < k; ++i) {
      if (names_[i].empty()) {
        throw ValidationError("group element names must be nonempty");
      }
      for (Index j = i + 1; j < k; ++j) {
        if (names_[i] == names_[j]) {
          throw ValidationError("duplicate group element name: " + names_[i]);
        }
      }
    }
    for (Index a = 0; a < k; ++a) {
      for (Index b = 0; b < k; ++b) {
        for (Index c = 0; c < k; ++c) {
          if (op(op(a, b), c) != op(a, op(b, c))) {
            throw ValidationError("group table is not associative");
          }
        }
      }
    }
    identity_ = k;
    for (Index e = 0; e < k; ++e) {
      bool ok = true;
      for (Index a = 0; a < k && ok; ++a) {
        ok = op(e, a) == a && op(a, e) == a;
      }
      if (ok) {
        identity_ = e;
        break;
      }
    }
    if (identity_ == k) throw ValidationError("group table has no identity");
    for (Index a = 0; a < k; ++a) {
      bool ok = false;
      for (Index b = 0; b < k && !ok; ++b) {
        ok = op(a, b) == identity_ && op(b, a) == identity_;
      }
      if (!ok) {
        throw ValidationError("group element " + names_[a] +
                              " has no inverse");
      }
    }
  }

  Index size() const noexcept { return static_cast<Index>(names_.size()); }

  Index op(Index a, Index b) const {
    return table_[static_cast<std::size_t>(a) * size() + b];
  }

  Index identity() const noexcept { return identity_; }

  Index inverse(Index a) const {
    for (Index b = 0; b < size(); ++b) {
      if (op(a, b) == identity_ && op(b, a) == identity_) return b;
    }
    throw ValidationError("element has no inverse");
  }

  const std::string& local_name(Index i) const { return names_.at(i); }

  Index require_local(const std::string& name) const {
    for (Index i = 0; i < size(); ++i) {
      if (names_[i] == name) return i;
    }
    throw UnknownElementError("unknown group element: " + name);
  }

 private:
  std::vector<std::string> names_;
  std::vector<Index> table_;
  Index identity_ = 0;
};

}  // namespace semialg
