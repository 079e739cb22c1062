// The convolution algebra of a finite semilattice and its tensor square.
//
// Basis vectors e_s multiply by e_s e_t = e_{st}; the tensor square
// carries the bimodule actions e_x.(e_s (x) e_t) = e_{xs} (x) e_t and
// (e_s (x) e_t).e_x = e_s (x) e_{tx}, and pi multiplies the legs
// together. Everything is exact and sparse.
//
// Operator norms out of an l1 space are attained on basis vectors, so
// operator_norm_on_basis maximises the norm of the basis images.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "semilattice.hpp"
#include "universe.hpp"
#include "vectors.hpp"

namespace semialg {

template <Semilattice S>
L1Vector convolve(const S& s, const L1Vector& a, const L1Vector& b) {
  require_same_carrier(s.universe(), a.carrier());
  require_same_carrier(s.universe(), b.carrier());
  L1Vector out(a.carrier());
  for (const auto& [i, ci] : a.coeffs()) {
    for (const auto& [j, cj] : b.coeffs()) {
      out.add(s.product(i, j), ci * cj);
    }
  }
  return out;
}

/// Coordinatewise product: the multiplication of functions on a set.
inline L1Vector pointwise_multiply(const L1Vector& a, const L1Vector& b) {
  require_same_carrier(a.carrier(), b.carrier());
  const auto& small = a.support_size() <= b.support_size() ? a : b;
  const auto& large = a.support_size() <= b.support_size() ? b : a;
  L1Vector out(a.carrier());
  for (const auto& [i, c] : small.coeffs()) {
    const Rational d = large.coeff(i);
    if (d != 0) out.set(i, c * d);
  }
  return out;
}

template <Semilattice S>
TensorVector tensor_left_act(const S& s, Index x, const TensorVector& t) {
  require_same_carrier(s.universe(), t.carrier());
  TensorVector out(t.carrier());
  for (const auto& [key, c] : t.coeffs()) {
    out.add({s.product(x, key.first), key.second}, c);
  }
  return out;
}

template <Semilattice S>
TensorVector tensor_right_act(const S& s, const TensorVector& t, Index x) {
  require_same_carrier(s.universe(), t.carrier());
  TensorVector out(t.carrier());
  for (const auto& [key, c] : t.coeffs()) {
    out.add({key.first, s.product(key.second, x)}, c);
  }
  return out;
}

/// The product map: pi(e_s (x) e_t) = e_{st}, extended linearly.
template <Semilattice S>
L1Vector pi(const S& s, const TensorVector& t) {
  require_same_carrier(s.universe(), t.carrier());
  L1Vector out(s.universe());
  for (const auto& [key, c] : t.coeffs()) {
    out.add(s.product(key.first, key.second), c);
  }
  return out;
}

inline Rational operator_norm_on_basis(const std::vector<L1Vector>& images) {
  Rational best = 0;
  for (const auto& v : images) {
    Rational n = v.l1_norm();
    if (n > best) best = n;
  }
  return best;
}

template <typename ImageFn>
Rational operator_norm_on_basis(Index dim, ImageFn&& image_of) {
  Rational best = 0;
  for (Index i = 0; i < dim; ++i) {
    Rational n = image_of(i).l1_norm();
    if (n > best) best = n;
  }
  return best;
}

struct CheckResult {
  bool pass = true;
  std::string detail;
};

/// The algebra of functions on a plain finite set: basis vectors are
/// orthogonal idempotents and the identity is the all-ones function.
class PointwiseAlgebra {
 public:
  explicit PointwiseAlgebra(UniversePtr omega) : u_(std::move(omega)) {}

  UniversePtr universe() const noexcept { return u_; }
  Index dim() const noexcept { return u_->size(); }

  L1Vector basis_product(Index i, Index j) const {
    L1Vector out(u_);
    if (i == j) out.set(i, 1);
    return out;
  }

  L1Vector identity() const {
    L1Vector out(u_);
    for (Index i = 0; i < dim(); ++i) out.set(i, 1);
    return out;
  }

 private:
  UniversePtr u_;
};

/// Verifies that a candidate diagonal map for the pointwise algebra on
/// `omega` commutes with both module actions on basis vectors and splits
/// the product map. `sigma` maps a basis index to a tensor over omega;
/// the canonical choice delta_w -> delta_w (x) delta_w passes.
template <typename SigmaFn>
CheckResult check_pointwise_diagonal_map(const UniversePtr& omega,
                                         SigmaFn&& sigma) {
  const Index n = omega->size();
  const auto act_left = [&](Index a, const TensorVector& t) {
    TensorVector out(omega);
    for (const auto& [key, c] : t.coeffs()) {
      if (key.first == a) out.add(key, c);
    }
    return out;
  };
  const auto act_right = [&](const TensorVector& t, Index a) {
    TensorVector out(omega);
    for (const auto& [key, c] : t.coeffs()) {
      if (key.second == a) out.add(key, c);
    }
    return out;
  };
  const auto product_map = [&](const TensorVector& t) {
    L1Vector out(omega);
    for (const auto& [key, c] : t.coeffs()) {
      if (key.first == key.second) out.add(key.first, c);
    }
    return out;
  };
  for (Index w = 0; w < n; ++w) {
    const TensorVector img = sigma(w);
    if (product_map(img) != L1Vector::unit(omega, w)) {
      return {false, "pi(sigma(delta_" + omega->name(w) + ")) != delta_" +
                         omega->name(w)};
    }
    for (Index a = 0; a < n; ++a) {
      if (act_left(a, img) != act_right(img, a)) {
        return {false, "delta_" + omega->name(a) + " does not commute with " +
                           "sigma(delta_" + omega->name(w) + ")"};
      }
    }
  }
  return {true, "checked " + std::to_string(n) + " basis elements"};
}

inline CheckResult check_pointwise_diagonal_map(const UniversePtr& omega) {
  return check_pointwise_diagonal_map(omega, [&](Index w) {
    return TensorVector::unit(omega, {w, w});
  });
}

}  // namespace semialg
