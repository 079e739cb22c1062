// Brute-force diagonal search, independent of the Mobius construction.
//
// A diagonal for an algebra with basis e_0..e_{n-1} and identity 1 is a
// tensor D with e_f.D = D.e_f for every basis f and pi(D) = 1. Both
// conditions are linear in the n^2 tensor coefficients, so the search is
// an exact rational linear solve; the solver reports whether the solution
// is unique (no free variables). This deliberately shares no code with
// the closed-form diagonal in schutz.hpp.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "l1_algebra.hpp"
#include "rational.hpp"
#include "semilattice.hpp"
#include "vectors.hpp"

namespace semialg {

template <typename A>
concept BasisAlgebra = requires(const A& a, Index i, Index j) {
  { a.universe() } -> std::convertible_to<UniversePtr>;
  { a.dim() } -> std::convertible_to<Index>;
  { a.basis_product(i, j) } -> std::convertible_to<L1Vector>;
  { a.identity() } -> std::convertible_to<L1Vector>;
};

/// The convolution algebra of a semilattice viewed abstractly through its
/// structure constants.
template <Semilattice S>
class ConvolutionAlgebra {
 public:
  explicit ConvolutionAlgebra(const S& s) : s_(&s) {}

  UniversePtr universe() const { return s_->universe(); }
  Index dim() const { return s_->size(); }

  L1Vector basis_product(Index i, Index j) const {
    return L1Vector::unit(s_->universe(), s_->product(i, j));
  }

  L1Vector identity() const {
    const auto id = s_->identity();
    if (!id) throw NotUnitalError("semilattice has no identity element");
    return L1Vector::unit(s_->universe(), *id);
  }

 private:
  const S* s_;
};

struct DiagonalSolution {
  TensorVector delta;
  bool unique = false;
};

struct OracleOptions {
  Index max_dim = 6;
};

namespace detail {

// One linear equation over the tensor coefficients, kept sorted by
// variable id with no zero entries, normalised so the leading coefficient
// is 1 once it becomes a pivot.
struct SparseRow {
  std::vector<std::pair<std::uint32_t, Rational>> terms;
  Rational rhs = 0;
};

class RationalSolver {
 public:
  explicit RationalSolver(std::uint32_t vars) : vars_(vars) {}

  /// Reduces the row against the current pivots and installs it as a new
  /// pivot if anything survives. Throws NoDiagonalError on 0 = nonzero.
  void add_row(SparseRow row) {
    while (!row.terms.empty()) {
      const std::uint32_t lead = row.terms.front().first;
      const auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        const Rational inv = Rational(1) / row.terms.front().second;
        for (auto& [v, c] : row.terms) c *= inv;
        row.rhs *= inv;
        pivots_.emplace(lead, std::move(row));
        return;
      }
      subtract_multiple(row, it->second, row.terms.front().second);
    }
    if (row.rhs != 0) {
      throw NoDiagonalError("no diagonal exists: constraints inconsistent");
    }
  }

  bool unique() const { return pivots_.size() == vars_; }

  /// Particular solution with all free variables set to zero.
  std::vector<Rational> solve() const {
    std::vector<Rational> x(vars_, Rational(0));
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      const SparseRow& row = it->second;
      Rational value = row.rhs;
      for (std::size_t k = 1; k < row.terms.size(); ++k) {
        value -= row.terms[k].second * x[row.terms[k].first];
      }
      x[it->first] = std::move(value);
    }
    return x;
  }

 private:
  // `factor` is taken by value: callers pass a coefficient that lives inside
  // row.terms, and the merge below replaces that storage before the final
  // rhs update.
  static void subtract_multiple(SparseRow& row, const SparseRow& pivot,
                                Rational factor) {
    std::vector<std::pair<std::uint32_t, Rational>> merged;
    merged.reserve(row.terms.size() + pivot.terms.size());
    std::size_t i = 0, j = 0;
    while (i < row.terms.size() || j < pivot.terms.size()) {
      if (j == pivot.terms.size() ||
          (i < row.terms.size() &&
           row.terms[i].first < pivot.terms[j].first)) {
        merged.push_back(std::move(row.terms[i++]));
      } else if (i == row.terms.size() ||
                 pivot.terms[j].first < row.terms[i].first) {
        merged.emplace_back(pivot.terms[j].first,
                            -factor * pivot.terms[j].second);
        ++j;
      } else {
        Rational c = row.terms[i].second - factor * pivot.terms[j].second;
        if (c != 0) merged.emplace_back(row.terms[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    row.terms = std::move(merged);
    row.rhs -= factor * pivot.rhs;
  }

  std::uint32_t vars_;
  std::map<std::uint32_t, SparseRow> pivots_;
};

}  // namespace detail

template <BasisAlgebra A>
DiagonalSolution diagonal_bruteforce(const A& alg, OracleOptions opt = {}) {
  const Index n = alg.dim();
  if (n > opt.max_dim) {
    throw OracleBoundError("instance dimension " + std::to_string(n) +
                           " exceeds the oracle bound " +
                           std::to_string(opt.max_dim));
  }
  const L1Vector one = alg.identity();  // throws NotUnitalError if absent
  const auto var = [n](Index s, Index t) -> std::uint32_t {
    return static_cast<std::uint32_t>(s) * n + t;
  };
  detail::RationalSolver solver(static_cast<std::uint32_t>(n) * n);

  // e_f . D - D . e_f = 0, one equation per basis f and target pair.
  using Target = std::pair<Index, Index>;
  for (Index f = 0; f < n; ++f) {
    std::vector<L1Vector> from_left, from_right;
    for (Index s = 0; s < n; ++s) {
      from_left.push_back(alg.basis_product(f, s));
      from_right.push_back(alg.basis_product(s, f));
    }
    std::map<Target, std::map<std::uint32_t, Rational>> rows;
    for (Index s = 0; s < n; ++s) {
      for (Index t = 0; t < n; ++t) {
        for (const auto& [u, c] : from_left[s].coeffs()) {
          rows[{u, t}][var(s, t)] += c;
        }
        for (const auto& [u, c] : from_right[t].coeffs()) {
          rows[{s, u}][var(s, t)] -= c;
        }
      }
    }
    for (const auto& [target, entries] : rows) {
      detail::SparseRow row;
      for (const auto& [v, c] : entries) {
        if (c != 0) row.terms.emplace_back(v, c);
      }
      solver.add_row(std::move(row));
    }
  }

  // pi(D) = 1, one equation per basis target.
  {
    std::map<Index, std::map<std::uint32_t, Rational>> rows;
    for (Index s = 0; s < n; ++s) {
      for (Index t = 0; t < n; ++t) {
        const L1Vector prod = alg.basis_product(s, t);
        for (const auto& [u, c] : prod.coeffs()) {
          rows[u][var(s, t)] += c;
        }
      }
    }
    for (Index u = 0; u < n; ++u) {
      detail::SparseRow row;
      for (const auto& [v, c] : rows[u]) {
        if (c != 0) row.terms.emplace_back(v, c);
      }
      row.rhs = one.coeff(u);
      solver.add_row(std::move(row));
    }
  }

  const std::vector<Rational> x = solver.solve();
  DiagonalSolution out{TensorVector(alg.universe()), solver.unique()};
  for (Index s = 0; s < n; ++s) {
    for (Index t = 0; t < n; ++t) {
      out.delta.set({s, t}, x[var(s, t)]);
    }
  }
  return out;
}

template <Semilattice S>
DiagonalSolution diagonal_bruteforce(const S& s, OracleOptions opt = {}) {
  return diagonal_bruteforce(ConvolutionAlgebra<S>(s), opt);
}

}  // namespace semialg
