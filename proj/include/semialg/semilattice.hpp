// Finite (meet-)semilattices: commutative idempotent semigroups. The
// canonical order is y <= x iff y*x = y; the product of two elements is
// then their greatest lower bound, and every nonempty finite semilattice
// has a zero (the product of all elements).
//
// Instances are anything satisfying the Semilattice concept below. The
// generic code only ever asks for products and downsets, so generated
// families can expose O(1) products and O(C) downsets without a table;
// TableSemilattice is the dense general-purpose model.

#pragma once

#include <algorithm>
#include <concepts>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poset.hpp"
#include "universe.hpp"

namespace semialg {

template <typename S>
concept Semilattice = requires(const S& s, Index i, Index j) {
  { s.universe() } -> std::convertible_to<UniversePtr>;
  { s.size() } -> std::convertible_to<Index>;
  { s.product(i, j) } -> std::same_as<Index>;
  // Sorted ascending; contains exactly the y with y*i = y (including i).
  { s.downset_of(i) } -> std::convertible_to<std::vector<Index>>;
  { s.zero() } -> std::same_as<Index>;
  { s.identity() } -> std::convertible_to<std::optional<Index>>;
};

enum class Validate : bool { no = false, yes = true };

/// Dense multiplication-table model. Validation checks idempotency,
/// commutativity and associativity and reports a witness for the first
/// failure in scan order.
class TableSemilattice {
 public:
  TableSemilattice(UniversePtr universe, std::vector<Index> table,
                   Validate validate = Validate::yes)
      : u_(std::move(universe)), n_(u_->size()), table_(std::move(table)) {
    if (n_ == 0) throw ValidationError("semilattice must be nonempty");
    if (table_.size() != static_cast<std::size_t>(n_) * n_) {
      throw ValidationError("product table size does not match carrier");
    }
    for (Index v : table_) {
      if (v >= n_) throw ValidationError("product table entry out of range");
    }
    if (validate == Validate::yes) check_axioms();
    derive_order();
  }

  UniversePtr universe() const noexcept { return u_; }

  Index size() const noexcept { return n_; }

  Index product(Index i, Index j) const {
    return table_[static_cast<std::size_t>(i) * n_ + j];
  }

  std::vector<Index> downset_of(Index i) const { return down_.at(i); }

  Index zero() const {
    if (!zero_) throw NoZeroElementError("semilattice has no zero element");
    return *zero_;
  }

  std::optional<Index> identity() const noexcept { return id_; }

  const std::vector<Index>& table() const noexcept { return table_; }

 private:
  void check_axioms() const {
    const auto& name = [&](Index i) -> const std::string& {
      return u_->name(i);
    };
    for (Index x = 0; x < n_; ++x) {
      if (product(x, x) != x) {
        throw NotIdempotentError(
            "not idempotent: " + name(x) + "*" + name(x) + " = " +
                name(product(x, x)),
            {name(x)});
      }
    }
    for (Index x = 0; x < n_; ++x) {
      for (Index y = x + 1; y < n_; ++y) {
        if (product(x, y) != product(y, x)) {
          throw NotCommutativeError(
              "not commutative: " + name(x) + "*" + name(y) + " = " +
                  name(product(x, y)) + " but " + name(y) + "*" + name(x) +
                  " = " + name(product(y, x)),
              {name(x), name(y)});
        }
      }
    }
    for (Index x = 0; x < n_; ++x) {
      for (Index y = 0; y < n_; ++y) {
        for (Index z = 0; z < n_; ++z) {
          if (product(product(x, y), z) != product(x, product(y, z))) {
            throw NotAssociativeError(
                "not associative on (" + name(x) + ", " + name(y) + ", " +
                    name(z) + ")",
                {name(x), name(y), name(z)});
          }
        }
      }
    }
  }

  void derive_order() {
    down_.assign(n_, {});
    for (Index x = 0; x < n_; ++x) {
      for (Index y = 0; y < n_; ++y) {
        if (product(y, x) == y) down_[x].push_back(y);
      }
    }
    for (Index z = 0; z < n_; ++z) {
      if (down_[z].size() == 1) {
        bool all = true;
        for (Index x = 0; x < n_ && all; ++x) all = product(z, x) == z;
        if (all) zero_ = z;
      }
    }
    for (Index e = 0; e < n_; ++e) {
      if (down_[e].size() == n_) {
        bool all = true;
        for (Index x = 0; x < n_ && all; ++x) all = product(e, x) == x;
        if (all) id_ = e;
      }
    }
  }

  UniversePtr u_;
  Index n_;
  std::vector<Index> table_;
  std::vector<std::vector<Index>> down_;
  std::optional<Index> zero_;
  std::optional<Index> id_;
};

inline TableSemilattice semilattice_from_table(
    std::vector<std::string> names, std::vector<Index> table,
    Validate validate = Validate::yes) {
  return TableSemilattice(make_universe(std::move(names)), std::move(table),
                          validate);
}

/// The canonical partial order of a semilattice, materialised sparsely.
template <Semilattice S>
Poset canonical_order(const S& s, bool validate = false) {
  std::vector<std::vector<Index>> down;
  down.reserve(s.size());
  for (Index i = 0; i < s.size(); ++i) down.push_back(s.downset_of(i));
  return Poset::from_downsets(s.universe(), std::move(down), validate);
}

/// Reconstructs the semilattice whose product is the greatest lower bound
/// in `p`. Throws NoMeetError (naming the pair) when some pair has no
/// greatest lower bound.
inline TableSemilattice semilattice_from_meet_poset(const Poset& p) {
  const Index n = p.size();
  if (n == 0) throw ValidationError("semilattice must be nonempty");
  std::vector<Index> table(static_cast<std::size_t>(n) * n);
  std::vector<Index> common;
  for (Index x = 0; x < n; ++x) {
    for (Index y = x; y < n; ++y) {
      const auto dx = p.downset(x);
      const auto dy = p.downset(y);
      common.clear();
      std::set_intersection(dx.begin(), dx.end(), dy.begin(), dy.end(),
                            std::back_inserter(common));
      Index best = 0;
      std::size_t best_size = 0;
      bool found = false;
      for (Index w : common) {
        if (!found || p.downset(w).size() > best_size) {
          best = w;
          best_size = p.downset(w).size();
          found = true;
        }
      }
      bool ok = found;
      for (std::size_t i = 0; ok && i < common.size(); ++i) {
        ok = p.leq(common[i], best);
      }
      if (!ok) {
        throw NoMeetError("no greatest lower bound for " +
                          p.universe()->name(x) + " and " +
                          p.universe()->name(y));
      }
      table[static_cast<std::size_t>(x) * n + y] = best;
      table[static_cast<std::size_t>(y) * n + x] = best;
    }
  }
  return TableSemilattice(p.universe(), std::move(table), Validate::yes);
}

/// The downset of f as a semilattice in its own right (downsets are ideals,
/// so the product of two elements below f stays below f). Element names are
/// inherited; the new carrier lists them in ambient index order, and f
/// becomes the identity of the result.
template <Semilattice S>
TableSemilattice downset_subsemilattice(const S& s, Index f) {
  const std::vector<Index> d = s.downset_of(f);
  const Index k = static_cast<Index>(d.size());
  std::vector<std::string> names;
  names.reserve(k);
  for (Index a : d) names.push_back(s.universe()->name(a));
  std::vector<Index> table(static_cast<std::size_t>(k) * k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) {
      const Index p = s.product(d[i], d[j]);
      const auto it = std::lower_bound(d.begin(), d.end(), p);
      if (it == d.end() || *it != p) {
        throw ValidationError("downset of " + s.universe()->name(f) +
                              " is not closed under the product");
      }
      table[static_cast<std::size_t>(i) * k + j] =
          static_cast<Index>(it - d.begin());
    }
  }
  return TableSemilattice(make_universe(std::move(names)), std::move(table),
                          Validate::yes);
}

}  // namespace semialg
