// Finite posets stored as sparse, sorted downsets, plus the Mobius
// function of the order. Storage is linear in the sum of downset sizes,
// never quadratic in the number of elements, so locally finite instances
// with huge carriers stay cheap.

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "universe.hpp"

namespace semialg {

class Poset {
 public:
  /// `down[x]` must list every y with y <= x, including x itself. Lists are
  /// sorted on construction. With `validate` set, reflexivity, antisymmetry
  /// and transitivity are checked and violations throw (antisymmetry
  /// failures throw CycleError, the rest ValidationError).
  static Poset from_downsets(UniversePtr universe,
                             std::vector<std::vector<Index>> down,
                             bool validate = true) {
    Poset p;
    p.universe_ = std::move(universe);
    p.down_ = std::move(down);
    const Index n = p.universe_->size();
    if (p.down_.size() != n) {
      throw ValidationError("downset list count does not match carrier size");
    }
    for (auto& d : p.down_) std::sort(d.begin(), d.end());
    if (validate) p.check_axioms();
    return p;
  }

  const UniversePtr& universe() const noexcept { return universe_; }

  Index size() const noexcept { return static_cast<Index>(down_.size()); }

  /// All y with y <= x, sorted ascending by index.
  std::span<const Index> downset(Index x) const { return down_.at(x); }

  /// y <= x in the stored order.
  bool leq(Index y, Index x) const {
    const auto& d = down_.at(x);
    return std::binary_search(d.begin(), d.end(), y);
  }

 private:
  Poset() = default;

  void check_axioms() const {
    const Index n = size();
    for (Index x = 0; x < n; ++x) {
      const auto& d = down_[x];
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] >= n) throw ValidationError("downset index out of range");
        if (i > 0 && d[i] == d[i - 1]) {
          throw ValidationError("duplicate entry in downset of " +
                                universe_->name(x));
        }
      }
      if (!std::binary_search(d.begin(), d.end(), x)) {
        throw ValidationError("order is not reflexive at " +
                              universe_->name(x));
      }
    }
    for (Index x = 0; x < n; ++x) {
      for (Index y : down_[x]) {
        if (y != x && leq(x, y)) {
          throw CycleError("antisymmetry violated: " + universe_->name(x) +
                           " and " + universe_->name(y) +
                           " lie below each other");
        }
        if (!std::includes(down_[x].begin(), down_[x].end(), down_[y].begin(),
                           down_[y].end())) {
          throw ValidationError("order is not transitive below " +
                                universe_->name(x));
        }
      }
    }
  }

  UniversePtr universe_;
  std::vector<std::vector<Index>> down_;
};

/// Builds the poset generated by `pairs` (each pair (a, b) asserts a <= b)
/// as the reflexive-transitive closure. Throws CycleError when the closure
/// would identify two distinct elements.
inline Poset poset_from_leq(UniversePtr universe,
                            const std::vector<std::pair<Index, Index>>& pairs) {
  const Index n = universe->size();
  std::vector<std::vector<Index>> below(n);
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) throw UnknownElementError("pair index out of range");
    if (a != b) below[b].push_back(a);
  }
  std::vector<std::vector<Index>> down(n);
  std::vector<char> seen(n, 0);
  std::vector<Index> stack;
  for (Index x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    stack.assign(1, x);
    seen[x] = 1;
    while (!stack.empty()) {
      const Index v = stack.back();
      stack.pop_back();
      down[x].push_back(v);
      for (Index w : below[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(down[x].begin(), down[x].end());
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y : down[x]) {
      if (y != x &&
          std::binary_search(down[y].begin(), down[y].end(), x)) {
        throw CycleError("antisymmetry violated: " + universe->name(x) +
                         " and " + universe->name(y) +
                         " lie below each other");
      }
    }
  }
  return Poset::from_downsets(std::move(universe), std::move(down), false);
}

inline Poset poset_from_leq(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  auto u = make_universe(std::move(elements));
  std::vector<std::pair<Index, Index>> resolved;
  resolved.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    resolved.emplace_back(u->require(a), u->require(b));
  }
  return poset_from_leq(std::move(u), resolved);
}

/// Largest downset cardinality (0 for the empty poset).
inline std::size_t local_finiteness_constant(const Poset& p) {
  std::size_t c = 0;
  for (Index x = 0; x < p.size(); ++x) {
    c = std::max(c, p.downset(x).size());
  }
  return c;
}

/// Length of a longest chain counted in edges: a maximal chain with k
/// elements contributes k - 1. The empty poset has height 0.
inline std::size_t height(const Poset& p) {
  const Index n = p.size();
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    return p.downset(a).size() < p.downset(b).size();
  });
  std::vector<std::size_t> h(n, 0);
  std::size_t best = 0;
  for (Index x : order) {
    for (Index y : p.downset(x)) {
      if (y != x) h[x] = std::max(h[x], h[y] + 1);
    }
    best = std::max(best, h[x]);
  }
  return best;
}

/// Mobius values over exactly the elements of `down`, which must be the
/// full downset of `top` in the ambient order (any ordering of the span is
/// accepted). Entry i of the result is mu(down[i], top), computed by the
/// standard top-down recursion: mu(top, top) = 1 and, for y < top,
/// mu(y, top) = -sum of mu(z, top) over z with y < z <= top.
template <typename LeqFn>
std::vector<Rational> mobius_to_top(std::span<const Index> down, Index top,
                                    LeqFn&& leq) {
  const std::size_t k = down.size();
  std::vector<std::size_t> cnt(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (leq(down[j], down[i])) ++cnt[i];
    }
  }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (cnt[a] != cnt[b]) return cnt[a] > cnt[b];
    return a < b;
  });
  std::vector<Rational> mu(k);
  std::vector<char> done(k, 0);
  for (std::size_t pos = 0; pos < k; ++pos) {
    const std::size_t i = order[pos];
    if (down[i] == top) {
      mu[i] = 1;
    } else {
      Rational sum = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (j != i && done[j] && leq(down[i], down[j])) sum += mu[j];
      }
      mu[i] = -sum;
    }
    done[i] = 1;
  }
  return mu;
}

/// Mobius function of a poset, stored per top element and aligned with the
/// poset's sorted downsets: `values_for(x)[i]` is mu(downset(x)[i], x).
class MobiusTable {
 public:
  MobiusTable(Poset order, std::vector<std::vector<Rational>> values)
      : order_(std::move(order)), mu_(std::move(values)) {}

  const Poset& order() const noexcept { return order_; }

  std::span<const Rational> values_for(Index x) const { return mu_.at(x); }

  /// mu(y, x); zero when y is not below x.
  Rational value(Index y, Index x) const {
    const auto d = order_.downset(x);
    const auto it = std::lower_bound(d.begin(), d.end(), y);
    if (it == d.end() || *it != y) return Rational(0);
    return mu_.at(x)[static_cast<std::size_t>(it - d.begin())];
  }

 private:
  Poset order_;
  std::vector<std::vector<Rational>> mu_;
};

inline MobiusTable mobius(const Poset& p) {
  std::vector<std::vector<Rational>> values;
  values.reserve(p.size());
  for (Index x = 0; x < p.size(); ++x) {
    values.push_back(mobius_to_top(
        p.downset(x), x, [&](Index a, Index b) { return p.leq(a, b); }));
  }
  return MobiusTable(p, std::move(values));
}

}  // namespace semialg
