// The Schutzenberger representation of a finite semilattice: the algebra
// map Sigma from the convolution algebra onto the pointwise algebra of the
// underlying set, Sigma(e_t) = sum of delta_s over s <= t, together with
// its inverse (Mobius inversion), the primitive idempotents realising the
// pointwise basis, a purely local inverse whose cost depends only on the
// downsets of the support, and the canonical diagonal in the unital case.

#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "l1_algebra.hpp"
#include "poset.hpp"
#include "semilattice.hpp"
#include "vectors.hpp"

namespace semialg {

/// Bundles a semilattice with its canonical order, the Mobius function of
/// that order, and the local finiteness constant C = max |downset|.
template <Semilattice S>
class SchutzContext {
 public:
  explicit SchutzContext(S s)
      : s_(std::move(s)),
        order_(canonical_order(s_)),
        mu_(mobius(order_)),
        c_(local_finiteness_constant(order_)) {}

  const S& semilattice() const noexcept { return s_; }
  const Poset& order() const noexcept { return order_; }
  const MobiusTable& mobius_table() const noexcept { return mu_; }
  std::size_t local_constant() const noexcept { return c_; }
  UniversePtr universe() const noexcept { return s_.universe(); }
  Index size() const noexcept { return s_.size(); }

 private:
  S s_;
  Poset order_;
  MobiusTable mu_;
  std::size_t c_;
};

/// Sigma(a): each e_t spreads to the indicator of its downset.
template <Semilattice S>
L1Vector schutz_apply(const SchutzContext<S>& ctx, const L1Vector& a) {
  require_same_carrier(ctx.universe(), a.carrier());
  L1Vector out(a.carrier());
  for (const auto& [t, c] : a.coeffs()) {
    for (Index s : ctx.order().downset(t)) out.add(s, c);
  }
  return out;
}

/// Sigma^{-1}(b) via the precomputed global Mobius table:
/// delta_x pulls back to sum of mu(y, x) e_y over y <= x.
template <Semilattice S>
L1Vector schutz_inverse_apply(const SchutzContext<S>& ctx, const L1Vector& b) {
  require_same_carrier(ctx.universe(), b.carrier());
  L1Vector out(b.carrier());
  for (const auto& [x, c] : b.coeffs()) {
    const auto down = ctx.order().downset(x);
    const auto mu_row = ctx.mobius_table().values_for(x);
    for (std::size_t i = 0; i < down.size(); ++i) {
      out.add(down[i], c * mu_row[i]);
    }
  }
  return out;
}

/// Sigma^{-1}(b) computed locally: the Mobius values are recomputed from
/// the downset of each support element alone, so the cost is
/// O(support * C^2) regardless of the size of the carrier. Kept as an
/// independent route from schutz_inverse_apply on purpose; the certificate
/// compares the two.
template <Semilattice S>
L1Vector local_inverse_apply(const SchutzContext<S>& ctx, const L1Vector& b) {
  require_same_carrier(ctx.universe(), b.carrier());
  const Poset& p = ctx.order();
  L1Vector out(b.carrier());
  for (const auto& [x, c] : b.coeffs()) {
    const auto down = p.downset(x);
    const auto mu_local = mobius_to_top(
        down, x, [&](Index a, Index bb) { return p.leq(a, bb); });
    for (std::size_t i = 0; i < down.size(); ++i) {
      out.add(down[i], c * mu_local[i]);
    }
  }
  return out;
}

/// The primitive idempotent rho_t: e_zero at the zero, otherwise the
/// product of (e_t - e_x) over all x strictly below t. Sigma sends rho_t
/// to delta_t, so rho_t = Sigma^{-1}(delta_t) and the rho_t are orthogonal
/// idempotents summing to the identity when one exists.
template <Semilattice S>
L1Vector primitive_idempotent(const SchutzContext<S>& ctx, Index t) {
  ctx.semilattice().zero();  // throws NoZeroElementError when absent
  L1Vector v = L1Vector::unit(ctx.universe(), t);
  const L1Vector et = v;
  for (Index x : ctx.order().downset(t)) {
    if (x == t) continue;
    v = convolve(ctx.semilattice(), v,
                 et - L1Vector::unit(ctx.universe(), x));
  }
  return v;
}

/// Exhaustive check that Sigma(rho_t) = delta_t and rho_t^2 = rho_t for
/// every t. Fails with the first offending element named.
template <Semilattice S>
CheckResult verify_primitive_idempotents(const SchutzContext<S>& ctx) {
  for (Index t = 0; t < ctx.size(); ++t) {
    const L1Vector r = primitive_idempotent(ctx, t);
    if (schutz_apply(ctx, r) != L1Vector::unit(ctx.universe(), t)) {
      return {false,
              "Sigma(rho_" + ctx.universe()->name(t) + ") != delta_" +
                  ctx.universe()->name(t)};
    }
    if (convolve(ctx.semilattice(), r, r) != r) {
      return {false, "rho_" + ctx.universe()->name(t) + " is not idempotent"};
    }
  }
  return {true, "checked " + std::to_string(ctx.size()) + " elements"};
}

/// The canonical diagonal of a unital finite semilattice:
/// sum over x of Sigma^{-1}(delta_x) (x) Sigma^{-1}(delta_x).
/// It commutes with both module actions and pi sends it to the identity.
template <Semilattice S>
TensorVector diagonal(const SchutzContext<S>& ctx) {
  if (!ctx.semilattice().identity()) {
    throw NotUnitalError("diagonal requires an identity element");
  }
  TensorVector out(ctx.universe());
  for (Index x = 0; x < ctx.size(); ++x) {
    const L1Vector v =
        schutz_inverse_apply(ctx, L1Vector::unit(ctx.universe(), x));
    for (const auto& [y, cy] : v.coeffs()) {
      for (const auto& [z, cz] : v.coeffs()) {
        out.add({y, z}, cy * cz);
      }
    }
  }
  return out;
}

}  // namespace semialg
