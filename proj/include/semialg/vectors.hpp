// Sparse vectors with exact rational coefficients over a named carrier.
// A BasisSeries never stores a zero coefficient, so support queries and
// equality are exact, and iteration order (ascending key) is deterministic.
//
// The Tag parameter only separates the roles at the type level:
//   L1Vector     coefficients on single elements
//   TensorVector coefficients on ordered pairs (elementary tensors)
//   BlockVector  coefficients on elements of a block decomposition

#pragma once

#include <map>
#include <ostream>
#include <utility>

#include "errors.hpp"
#include "rational.hpp"
#include "universe.hpp"

namespace semialg {

template <typename Key, typename Tag>
class BasisSeries {
 public:
  explicit BasisSeries(UniversePtr carrier) : carrier_(std::move(carrier)) {}

  static BasisSeries unit(UniversePtr carrier, Key key, Rational c = 1) {
    BasisSeries v(std::move(carrier));
    v.set(key, std::move(c));
    return v;
  }

  const UniversePtr& carrier() const noexcept { return carrier_; }

  const std::map<Key, Rational>& coeffs() const noexcept { return coeffs_; }

  Rational coeff(const Key& key) const {
    const auto it = coeffs_.find(key);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  std::size_t support_size() const noexcept { return coeffs_.size(); }

  void set(const Key& key, Rational c) {
    if (c == 0) {
      coeffs_.erase(key);
    } else {
      coeffs_[key] = std::move(c);
    }
  }

  void add(const Key& key, const Rational& c) {
    if (c == 0) return;
    const auto [it, fresh] = coeffs_.emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  Rational l1_norm() const {
    Rational sum = 0;
    for (const auto& [key, c] : coeffs_) sum += abs(c);
    return sum;
  }

  BasisSeries& operator+=(const BasisSeries& other) {
    require_same_carrier(carrier_, other.carrier_);
    for (const auto& [key, c] : other.coeffs_) add(key, c);
    return *this;
  }

  BasisSeries& operator-=(const BasisSeries& other) {
    require_same_carrier(carrier_, other.carrier_);
    for (const auto& [key, c] : other.coeffs_) add(key, -c);
    return *this;
  }

  BasisSeries& operator*=(const Rational& c) {
    if (c == 0) {
      coeffs_.clear();
    } else {
      for (auto& [key, v] : coeffs_) v *= c;
    }
    return *this;
  }

  friend BasisSeries operator+(BasisSeries a, const BasisSeries& b) {
    a += b;
    return a;
  }

  friend BasisSeries operator-(BasisSeries a, const BasisSeries& b) {
    a -= b;
    return a;
  }

  friend BasisSeries operator*(const Rational& c, BasisSeries v) {
    v *= c;
    return v;
  }

  friend BasisSeries operator*(BasisSeries v, const Rational& c) {
    v *= c;
    return v;
  }

  friend BasisSeries operator-(BasisSeries v) {
    for (auto& [key, c] : v.coeffs_) c = -c;
    return v;
  }

  friend bool operator==(const BasisSeries& a, const BasisSeries& b) {
    return same_carrier(a.carrier_, b.carrier_) && a.coeffs_ == b.coeffs_;
  }

 private:
  UniversePtr carrier_;
  std::map<Key, Rational> coeffs_;
};

struct L1Tag {};
struct TensorTag {};
struct BlockTag {};

using L1Vector = BasisSeries<Index, L1Tag>;
using TensorVector = BasisSeries<std::pair<Index, Index>, TensorTag>;
using BlockVector = BasisSeries<Index, BlockTag>;

/// One "<element> <p>/<q>" line per nonzero coefficient, ascending index.
template <typename Tag>
void write_vector(std::ostream& out, const BasisSeries<Index, Tag>& v) {
  for (const auto& [key, c] : v.coeffs()) {
    out << v.carrier()->name(key) << ' ' << format_rational(c) << '\n';
  }
}

/// One "<s> <t> <p>/<q>" line per nonzero coefficient, lexicographic in
/// the index pair.
inline void write_tensor(std::ostream& out, const TensorVector& v) {
  for (const auto& [key, c] : v.coeffs()) {
    out << v.carrier()->name(key.first) << ' ' << v.carrier()->name(key.second)
        << ' ' << format_rational(c) << '\n';
  }
}

}  // namespace semialg
