// Generated semilattice families. Each family exposes O(1) products and
// downsets computed on demand, so instances with very large carriers never
// materialise a multiplication table.
//
//   chain(n)      c1 < c2 < ... < cn with product min
//   nmin(n)       {1..n} with product min (a chain under numeric names)
//   fan(n)        zero theta under pairwise-incomparable a1..an
//   fan_unital(n) fan(n) with an identity "one" adjoined on top
//   paper_s(n)    theta, atoms b1..bn, and maximal a1..a2n where the pair
//                 a(2r-1), a(2r) meets in br and all other distinct
//                 products of maximal elements fall to theta
//
// fan(n) is locally 2-finite for every n; paper_s(n) is locally 3-finite
// (see family_note for the counting caveat); nmin(n) has constant n.

#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "semilattice.hpp"
#include "universe.hpp"

namespace semialg {

namespace detail {

inline std::vector<std::string> numbered(const std::string& prefix, Index n,
                                         Index from = 1) {
  std::vector<std::string> names;
  names.reserve(n);
  for (Index i = 0; i < n; ++i) {
    names.push_back(prefix + std::to_string(from + i));
  }
  return names;
}

inline void require_size(Index n) {
  if (n < 1) throw ValidationError("family size must be at least 1");
}

}  // namespace detail

class ChainSemilattice {
 public:
  enum class Naming { chain, numeric };

  explicit ChainSemilattice(Index n, Naming naming = Naming::chain) : n_(n) {
    detail::require_size(n);
    u_ = make_universe(naming == Naming::chain ? detail::numbered("c", n)
                                               : detail::numbered("", n));
  }

  UniversePtr universe() const noexcept { return u_; }
  Index size() const noexcept { return n_; }

  Index product(Index i, Index j) const { return i < j ? i : j; }

  std::vector<Index> downset_of(Index i) const {
    std::vector<Index> d(i + 1);
    for (Index k = 0; k <= i; ++k) d[k] = k;
    return d;
  }

  Index zero() const noexcept { return 0; }
  std::optional<Index> identity() const noexcept { return n_ - 1; }

 private:
  Index n_;
  UniversePtr u_;
};

/// Index 0 is theta; indices 1..n are the pairwise-incomparable a_i.
class FanSemilattice {
 public:
  explicit FanSemilattice(Index n) : n_(n) {
    detail::require_size(n);
    auto names = detail::numbered("a", n);
    names.insert(names.begin(), "theta");
    u_ = make_universe(std::move(names));
  }

  UniversePtr universe() const noexcept { return u_; }
  Index size() const noexcept { return n_ + 1; }

  Index product(Index i, Index j) const { return i == j ? i : 0; }

  std::vector<Index> downset_of(Index i) const {
    if (i == 0) return {0};
    return {0, i};
  }

  Index zero() const noexcept { return 0; }
  std::optional<Index> identity() const noexcept {
    if (n_ == 1) return 1;
    return std::nullopt;
  }

 private:
  Index n_;
  UniversePtr u_;
};

/// fan(n) with an identity adjoined: index 0 is theta, 1..n the a_i, and
/// n+1 the identity "one". Height is 2 for every n.
class FanUnitalSemilattice {
 public:
  explicit FanUnitalSemilattice(Index n) : n_(n) {
    detail::require_size(n);
    auto names = detail::numbered("a", n);
    names.insert(names.begin(), "theta");
    names.push_back("one");
    u_ = make_universe(std::move(names));
  }

  UniversePtr universe() const noexcept { return u_; }
  Index size() const noexcept { return n_ + 2; }

  Index product(Index i, Index j) const {
    if (i == n_ + 1) return j;
    if (j == n_ + 1) return i;
    return i == j ? i : 0;
  }

  std::vector<Index> downset_of(Index i) const {
    if (i == 0) return {0};
    if (i <= n_) return {0, i};
    std::vector<Index> d(n_ + 2);
    for (Index k = 0; k < n_ + 2; ++k) d[k] = k;
    return d;
  }

  Index zero() const noexcept { return 0; }
  std::optional<Index> identity() const noexcept { return n_ + 1; }

 private:
  Index n_;
  UniversePtr u_;
};

/// Index 0 is theta, 1..2n the maximal a_m, 2n+1..3n the atoms b_r. The
/// downset of a_m is {theta, b_ceil(m/2), a_m}, so the local finiteness
/// constant is 3 for every n.
class PairedFanSemilattice {
 public:
  explicit PairedFanSemilattice(Index n) : n_(n) {
    detail::require_size(n);
    std::vector<std::string> names;
    names.reserve(3 * n + 1);
    names.push_back("theta");
    for (Index m = 1; m <= 2 * n; ++m) names.push_back("a" + std::to_string(m));
    for (Index r = 1; r <= n; ++r) names.push_back("b" + std::to_string(r));
    u_ = make_universe(std::move(names));
  }

  UniversePtr universe() const noexcept { return u_; }
  Index size() const noexcept { return 3 * n_ + 1; }

  Index product(Index i, Index j) const {
    if (i == j) return i;
    if (i == 0 || j == 0) return 0;
    const bool ai = is_a(i), aj = is_a(j);
    if (ai && aj) return pair_of(i) == pair_of(j) ? atom_index(pair_of(i)) : 0;
    if (ai && !aj) return atom_index(pair_of(i)) == j ? j : 0;
    if (!ai && aj) return atom_index(pair_of(j)) == i ? i : 0;
    return 0;
  }

  std::vector<Index> downset_of(Index i) const {
    if (i == 0) return {0};
    if (is_a(i)) return {0, i, atom_index(pair_of(i))};
    return {0, i};
  }

  Index zero() const noexcept { return 0; }
  std::optional<Index> identity() const noexcept { return std::nullopt; }

 private:
  bool is_a(Index i) const { return i >= 1 && i <= 2 * n_; }
  Index pair_of(Index a) const { return (a + 1) / 2; }
  Index atom_index(Index r) const { return 2 * n_ + r; }

  Index n_;
  UniversePtr u_;
};

enum class FamilyKind { chain, fan, fan_unital, nmin, paper_s };

inline std::optional<FamilyKind> parse_family_name(std::string_view name) {
  if (name == "chain") return FamilyKind::chain;
  if (name == "fan") return FamilyKind::fan;
  if (name == "fan_unital") return FamilyKind::fan_unital;
  if (name == "nmin") return FamilyKind::nmin;
  if (name == "paper_s" || name == "paper_S") return FamilyKind::paper_s;
  return std::nullopt;
}

inline std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::chain: return "chain";
    case FamilyKind::fan: return "fan";
    case FamilyKind::fan_unital: return "fan_unital";
    case FamilyKind::nmin: return "nmin";
    case FamilyKind::paper_s: return "paper_s";
  }
  return {};
}

inline std::string family_label(FamilyKind kind, Index n) {
  return family_name(kind) + "(" + std::to_string(n) + ")";
}

/// Caveat attached to reports for families whose commonly quoted local
/// finiteness figure counts differently from this library.
inline std::optional<std::string> family_note(FamilyKind kind) {
  if (kind == FamilyKind::paper_s) {
    return std::string(
        "downsets of the maximal elements contain three elements "
        "(the element itself, its atom, and the zero); the figure 2 "
        "sometimes quoted for this family counts only the elements "
        "strictly below a maximal element");
  }
  return std::nullopt;
}

using AnySemilattice =
    std::variant<TableSemilattice, ChainSemilattice, FanSemilattice,
                 FanUnitalSemilattice, PairedFanSemilattice>;

inline AnySemilattice generate_family(FamilyKind kind, Index n) {
  switch (kind) {
    case FamilyKind::chain:
      return ChainSemilattice(n, ChainSemilattice::Naming::chain);
    case FamilyKind::nmin:
      return ChainSemilattice(n, ChainSemilattice::Naming::numeric);
    case FamilyKind::fan:
      return FanSemilattice(n);
    case FamilyKind::fan_unital:
      return FanUnitalSemilattice(n);
    case FamilyKind::paper_s:
      return PairedFanSemilattice(n);
  }
  throw UnknownFamilyError("unknown family");
}

inline AnySemilattice generate_family(std::string_view name, Index n) {
  const auto kind = parse_family_name(name);
  if (!kind) {
    throw UnknownFamilyError("unknown family: " + std::string(name));
  }
  return generate_family(*kind, n);
}

struct FamilySpec {
  FamilyKind kind;
  Index n;
};

/// Parses "name:n" (e.g. "fan:100"). Returns nullopt when the text is not
/// of that shape; throws ValidationError when the name matches a family
/// but n is not a positive integer.
inline std::optional<FamilySpec> parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const auto kind = parse_family_name(text.substr(0, colon));
  if (!kind) return std::nullopt;
  const auto digits = text.substr(colon + 1);
  Index n = 0;
  const auto [end, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || end != digits.data() + digits.size() || n < 1) {
    throw ValidationError("family size must be a positive integer: " +
                          std::string(text));
  }
  return FamilySpec{*kind, n};
}

}  // namespace semialg
