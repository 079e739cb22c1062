// Strong semilattices of finite groups. An instance glues one finite
// group G(x) onto every element x of a semilattice L via structure
// homomorphisms phi[x -> y] : G(x) -> G(y) for y <= x, given on cover
// pairs and composed downward; composition must be path-independent
// (checked). The product of s in G(e) and t in G(f) pushes both into
// G(ef) and multiplies there, which yields an associative product whose
// idempotents are exactly the component identities.
//
// The natural order puts s <= t iff s = t*x for some x in L; the downset
// of t is then the translate {t*f : f <= q(t)} of the downset of its
// component q(t), meeting each component at most once. This makes the
// blockwise Schutzenberger map and its inverse as local as in the plain
// semilattice case.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "group.hpp"
#include "l1_algebra.hpp"
#include "parallel.hpp"
#include "poset.hpp"
#include "semilattice.hpp"
#include "universe.hpp"
#include "vectors.hpp"
#include "verdict.hpp"

namespace semialg {

struct CliffordData {
  TableSemilattice lattice;
  std::vector<FiniteGroup> groups;
  // Keyed by (upper, lower) cover pairs of the lattice order; the vector
  // maps each element of G(upper) to its image in G(lower). Pairs whose
  // upper group is trivial may be omitted.
  std::map<std::pair<Index, Index>, std::vector<Index>> cover_phi;
};

class CliffordSemigroup {
 public:
  explicit CliffordSemigroup(CliffordData data)
      : lattice_(std::move(data.lattice)),
        groups_(std::move(data.groups)),
        order_(canonical_order(lattice_)),
        mu_(mobius(order_)) {
    const Index m = lattice_.size();
    if (groups_.size() != m) {
      throw ValidationError("expected one group per idempotent");
    }
    build_covers();
    check_cover_maps(data.cover_phi);
    build_full_phi(data.cover_phi);
    flatten();
    check_associativity();
  }

  const TableSemilattice& idempotents() const noexcept { return lattice_; }
  const Poset& lattice_order() const noexcept { return order_; }
  const MobiusTable& lattice_mobius() const noexcept { return mu_; }
  const FiniteGroup& group(Index comp) const { return groups_.at(comp); }

  UniversePtr universe() const noexcept { return universe_; }
  Index size() const noexcept { return universe_->size(); }
  Index components() const noexcept { return lattice_.size(); }

  Index component_of(Index t) const { return component_.at(t); }
  Index local_of(Index t) const { return t - offset_[component_.at(t)]; }
  Index global_of(Index comp, Index local) const {
    return offset_.at(comp) + local;
  }
  Index idempotent_global(Index comp) const {
    return global_of(comp, groups_[comp].identity());
  }

  /// The structure map G(x) -> G(y) for y <= x, fully composed.
  Index phi_apply(Index x, Index y, Index local) const {
    return phi_full_.at({x, y}).at(local);
  }

  Index multiply(Index s, Index t) const {
    const Index e = component_of(s);
    const Index f = component_of(t);
    const Index h = lattice_.product(e, f);
    const Index a = phi_apply(e, h, local_of(s));
    const Index b = phi_apply(f, h, local_of(t));
    return global_of(h, groups_[h].op(a, b));
  }

 private:
  void build_covers() {
    const Index m = lattice_.size();
    covers_up_.assign(m, {});
    for (Index x = 0; x < m; ++x) {
      for (Index y : order_.downset(x)) {
        if (y == x) continue;
        bool is_cover = true;
        for (Index z : order_.downset(x)) {
          if (z != x && z != y && order_.leq(y, z)) {
            is_cover = false;
            break;
          }
        }
        if (is_cover) {
          cover_pairs_.emplace_back(x, y);
          covers_up_[y].push_back(x);
        }
      }
    }
    std::sort(cover_pairs_.begin(), cover_pairs_.end());
  }

  void check_cover_maps(
      const std::map<std::pair<Index, Index>, std::vector<Index>>& phi)
      const {
    const auto& uni = *lattice_.universe();
    for (const auto& [key, img] : phi) {
      const auto [x, y] = key;
      if (x >= lattice_.size() || y >= lattice_.size()) {
        throw ValidationError("structure map names an unknown idempotent");
      }
      if (!std::binary_search(cover_pairs_.begin(), cover_pairs_.end(),
                              key)) {
        throw ValidationError("structure map given for " + uni.name(x) +
                              " -> " + uni.name(y) +
                              ", which is not a cover pair");
      }
      const FiniteGroup& gx = groups_[x];
      const FiniteGroup& gy = groups_[y];
      if (img.size() != gx.size()) {
        throw ValidationError("structure map for " + uni.name(x) + " -> " +
                              uni.name(y) + " must cover all of the group");
      }
      for (Index v : img) {
        if (v >= gy.size()) {
          throw ValidationError("structure map image out of range");
        }
      }
      if (img[gx.identity()] != gy.identity()) {
        throw ValidationError("structure map for " + uni.name(x) + " -> " +
                              uni.name(y) + " does not fix the identity");
      }
      for (Index a = 0; a < gx.size(); ++a) {
        for (Index b = 0; b < gx.size(); ++b) {
          if (img[gx.op(a, b)] != gy.op(img[a], img[b])) {
            throw ValidationError("structure map for " + uni.name(x) +
                                  " -> " + uni.name(y) +
                                  " is not a homomorphism");
          }
        }
      }
    }
    for (const auto& [x, y] : cover_pairs_) {
      if (groups_[x].size() > 1 && !phi.count({x, y})) {
        throw ValidationError("missing structure map for cover pair " +
                              uni.name(x) + " -> " + uni.name(y));
      }
    }
  }

  void build_full_phi(
      const std::map<std::pair<Index, Index>, std::vector<Index>>& phi) {
    const auto cover_map = [&](Index x, Index y) {
      const auto it = phi.find({x, y});
      if (it != phi.end()) return it->second;
      // Implicit map from a trivial group: everything to the identity.
      return std::vector<Index>(groups_[x].size(), groups_[y].identity());
    };
    for (Index x = 0; x < lattice_.size(); ++x) {
      std::vector<Index> ident(groups_[x].size());
      for (Index a = 0; a < groups_[x].size(); ++a) ident[a] = a;
      phi_full_[{x, x}] = std::move(ident);

      // Walk the downset from larger to smaller downsets, so every
      // intermediate map is ready before it is composed with.
      std::vector<Index> below(order_.downset(x).begin(),
                               order_.downset(x).end());
      std::sort(below.begin(), below.end(), [&](Index a, Index b) {
        if (order_.downset(a).size() != order_.downset(b).size()) {
          return order_.downset(a).size() > order_.downset(b).size();
        }
        return a < b;
      });
      for (Index y : below) {
        if (y == x) continue;
        std::optional<std::vector<Index>> chosen;
        for (Index z : covers_up_[y]) {
          if (!order_.leq(z, x)) continue;
          const std::vector<Index>& upper = phi_full_.at({x, z});
          const std::vector<Index> step = cover_map(z, y);
          std::vector<Index> composed(groups_[x].size());
          for (Index a = 0; a < groups_[x].size(); ++a) {
            composed[a] = step[upper[a]];
          }
          if (!chosen) {
            chosen = std::move(composed);
          } else if (*chosen != composed) {
            throw ValidationError(
                "structure maps are not coherent between " +
                lattice_.universe()->name(x) + " and " +
                lattice_.universe()->name(y));
          }
        }
        phi_full_[{x, y}] = std::move(*chosen);
      }
    }
  }

  void flatten() {
    const Index m = lattice_.size();
    offset_.resize(m);
    Index total = 0;
    for (Index x = 0; x < m; ++x) {
      offset_[x] = total;
      total += groups_[x].size();
    }
    std::vector<std::string> names;
    names.reserve(total);
    component_.resize(total);
    for (Index x = 0; x < m; ++x) {
      const FiniteGroup& g = groups_[x];
      for (Index a = 0; a < g.size(); ++a) {
        component_[offset_[x] + a] = x;
        if (a == g.identity()) {
          names.push_back(lattice_.universe()->name(x));
        } else {
          names.push_back(lattice_.universe()->name(x) + "." +
                          g.local_name(a));
        }
      }
    }
    universe_ = make_universe(std::move(names));
  }

  // The product is associative by construction once the structure maps
  // are coherent; this is a defensive check on top, capped so huge
  // instances do not cube.
  void check_associativity() const {
    const std::size_t n = size();
    if (n * n * n > 1'000'000) return;
    for (Index s = 0; s < size(); ++s) {
      for (Index t = 0; t < size(); ++t) {
        for (Index v = 0; v < size(); ++v) {
          if (multiply(multiply(s, t), v) != multiply(s, multiply(t, v))) {
            throw ValidationError("product is not associative on (" +
                                  universe_->name(s) + ", " +
                                  universe_->name(t) + ", " +
                                  universe_->name(v) + ")");
          }
        }
      }
    }
  }

  TableSemilattice lattice_;
  std::vector<FiniteGroup> groups_;
  Poset order_;
  MobiusTable mu_;
  std::vector<std::pair<Index, Index>> cover_pairs_;
  std::vector<std::vector<Index>> covers_up_;
  std::map<std::pair<Index, Index>, std::vector<Index>> phi_full_;
  std::vector<Index> offset_;
  std::vector<Index> component_;
  UniversePtr universe_;
};

/// The retraction onto idempotents: the identity of the component of t.
inline Index idempotent_of(const CliffordSemigroup& g, Index t) {
  return g.idempotent_global(g.component_of(t));
}

/// s <= t iff s = t*x for some x in L; equivalently s = t*f over f below
/// the component of t, which is how the downsets are built here. The
/// returned poset is fully validated.
inline Poset natural_order(const CliffordSemigroup& g) {
  std::vector<std::vector<Index>> down(g.size());
  for (Index t = 0; t < g.size(); ++t) {
    for (Index f : g.idempotents().downset_of(g.component_of(t))) {
      down[t].push_back(g.multiply(t, g.idempotent_global(f)));
    }
  }
  return Poset::from_downsets(g.universe(), std::move(down), true);
}

/// Componentwise product in the block decomposition: basis elements of
/// different components annihilate, equal components multiply in their
/// group.
inline BlockVector block_multiply(const CliffordSemigroup& g,
                                  const BlockVector& a, const BlockVector& b) {
  require_same_carrier(g.universe(), a.carrier());
  require_same_carrier(g.universe(), b.carrier());
  BlockVector out(g.universe());
  for (const auto& [s, cs] : a.coeffs()) {
    for (const auto& [t, ct] : b.coeffs()) {
      if (g.component_of(s) == g.component_of(t)) {
        out.add(g.multiply(s, t), cs * ct);
      }
    }
  }
  return out;
}

/// Blockwise Schutzenberger map: e_t spreads to the indicator of the
/// natural-order downset of t, one entry per component below q(t).
inline BlockVector schutz_clifford(const CliffordSemigroup& g,
                                   const L1Vector& a) {
  require_same_carrier(g.universe(), a.carrier());
  BlockVector out(g.universe());
  for (const auto& [t, c] : a.coeffs()) {
    for (Index f : g.idempotents().downset_of(g.component_of(t))) {
      out.add(g.multiply(t, g.idempotent_global(f)), c);
    }
  }
  return out;
}

/// Inverse of the blockwise map: a block basis element in component f
/// pulls back through the Mobius function of the downset of f in L,
/// translated by the element itself.
inline L1Vector schutz_clifford_inverse(const CliffordSemigroup& g,
                                        const BlockVector& b) {
  require_same_carrier(g.universe(), b.carrier());
  L1Vector out(g.universe());
  for (const auto& [s, c] : b.coeffs()) {
    const Index f = g.component_of(s);
    const auto down = g.lattice_order().downset(f);
    const auto mu_row = g.lattice_mobius().values_for(f);
    for (std::size_t i = 0; i < down.size(); ++i) {
      out.add(g.multiply(s, g.idempotent_global(down[i])), c * mu_row[i]);
    }
  }
  return out;
}

/// The retraction extends to an algebra map e_t -> e_q(t) iff q turns
/// products into lattice products; checked on all basis pairs.
inline CheckResult retraction_check(const CliffordSemigroup& g) {
  for (Index e = 0; e < g.components(); ++e) {
    if (idempotent_of(g, g.idempotent_global(e)) != g.idempotent_global(e)) {
      return {false, "retraction moves the idempotent " +
                         g.idempotents().universe()->name(e)};
    }
  }
  for (Index s = 0; s < g.size(); ++s) {
    for (Index t = 0; t < g.size(); ++t) {
      const Index lhs = g.component_of(g.multiply(s, t));
      const Index rhs =
          g.idempotents().product(g.component_of(s), g.component_of(t));
      if (lhs != rhs) {
        return {false, "retraction is not multiplicative on (" +
                           g.universe()->name(s) + ", " +
                           g.universe()->name(t) + ")"};
      }
    }
  }
  return {true,
          "checked " + std::to_string(static_cast<std::size_t>(g.size()) *
                                      g.size()) +
              " pairs"};
}

struct CliffordReport {
  std::string input_label;
  Index idempotent_count = 0;
  Index element_count = 0;
  std::vector<std::pair<std::string, Index>> component_sizes;
  std::size_t local_constant = 0;
  std::vector<Verdict> verdicts;

  bool all_pass() const {
    for (const auto& v : verdicts) {
      if (v.state == Verdict::State::fail) return false;
    }
    return true;
  }
};

struct CliffordVerifyOptions {
  std::size_t work_cap = 4'000'000;
  std::size_t sample_size = 1000;
};

inline CliffordReport clifford_verify(const CliffordSemigroup& g,
                                      std::string label,
                                      CliffordVerifyOptions opt = {}) {
  const std::size_t n = g.size();
  const std::size_t m = g.components();
  CliffordReport rep;
  rep.input_label = std::move(label);
  rep.idempotent_count = static_cast<Index>(m);
  rep.element_count = static_cast<Index>(n);
  for (Index x = 0; x < m; ++x) {
    rep.component_sizes.emplace_back(g.idempotents().universe()->name(x),
                                     g.group(x).size());
  }

  const auto add = [&](std::string name, bool ok, std::string detail) {
    rep.verdicts.push_back({std::move(name),
                            ok ? Verdict::State::pass : Verdict::State::fail,
                            std::move(detail)});
  };
  const auto skip = [&](std::string name, std::string why) {
    rep.verdicts.push_back(
        {std::move(name), Verdict::State::skipped, std::move(why)});
  };
  const auto scan_ids = [&](const detail::IdTargets& t, auto&& check) {
    detail::Scan agg;
    for (std::size_t id : t.list) {
      agg = detail::combine_scans(agg, check(id));
    }
    return agg;
  };
  const auto id_verdict = [&](std::string name, const detail::IdTargets& t,
                              std::size_t count, const detail::Scan& scan,
                              auto&& describe) {
    if (scan.ok) {
      add(std::move(name), true, detail::mode_detail(t, count));
    } else {
      add(std::move(name), false,
          detail::mode_detail(t, count) + ", failed at " +
              describe(*scan.witness));
    }
  };
  const auto pair_name = [&](std::size_t id) {
    return "(" + g.universe()->name(static_cast<Index>(id / n)) + ", " +
           g.universe()->name(static_cast<Index>(id % n)) + ")";
  };

  {
    const auto t = detail::budget_ids(n * n * n, 1, opt.work_cap,
                                      opt.sample_size, 0xc11f0001u);
    const auto scan = scan_ids(t, [&](std::size_t id) {
      const Index s = static_cast<Index>(id / (n * n));
      const Index u = static_cast<Index>((id / n) % n);
      const Index v = static_cast<Index>(id % n);
      detail::Scan r;
      r.ok = g.multiply(g.multiply(s, u), v) == g.multiply(s, g.multiply(u, v));
      if (!r.ok) r.witness = id;
      return r;
    });
    id_verdict("associativity", t, n * n * n, scan, [&](std::size_t id) {
      return "(" + g.universe()->name(static_cast<Index>(id / (n * n))) +
             ", " + g.universe()->name(static_cast<Index>((id / n) % n)) +
             ", " + g.universe()->name(static_cast<Index>(id % n)) + ")";
    });
  }

  {
    const auto t = detail::budget_ids(n * n, 1, opt.work_cap, opt.sample_size,
                                      0xc11f0002u);
    const auto scan = scan_ids(t, [&](std::size_t id) {
      const Index s = static_cast<Index>(id / n);
      const Index u = static_cast<Index>(id % n);
      detail::Scan r;
      r.ok = g.component_of(g.multiply(s, u)) ==
             g.idempotents().product(g.component_of(s), g.component_of(u));
      if (!r.ok) r.witness = id;
      return r;
    });
    id_verdict("retraction_homomorphism", t, n * n, scan, pair_name);
  }

  {
    bool ok = true;
    std::string witness;
    for (Index e = 0; e < m && ok; ++e) {
      const Index eg = g.idempotent_global(e);
      ok = g.multiply(eg, eg) == eg && idempotent_of(g, eg) == eg;
      if (!ok) witness = g.universe()->name(eg);
    }
    add("retraction_fixes_idempotents", ok,
        ok ? "exhaustive " + std::to_string(m) : "failed at " + witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (Index t = 0; t < n && ok; ++t) {
      const Index e = idempotent_of(g, static_cast<Index>(t));
      ok = g.multiply(static_cast<Index>(t), e) == static_cast<Index>(t) &&
           g.multiply(e, static_cast<Index>(t)) == static_cast<Index>(t);
      if (!ok) witness = g.universe()->name(static_cast<Index>(t));
    }
    add("times_own_idempotent", ok,
        ok ? "exhaustive " + std::to_string(n) : "failed at " + witness);
  }

  std::optional<Poset> order;
  try {
    order = natural_order(g);
    add("natural_order_axioms", true, "");
  } catch (const Error& e) {
    add("natural_order_axioms", false, e.what());
  }

  if (!order) {
    for (const char* name :
         {"natural_order_restricts_to_lattice", "downset_translation",
          "downset_meets_component_once", "local_constant_transfer"}) {
      skip(name, "natural order invalid");
    }
  } else {
    {
      bool ok = true;
      std::string witness;
      for (Index e = 0; e < m && ok; ++e) {
        for (Index f = 0; f < m && ok; ++f) {
          ok = order->leq(g.idempotent_global(e), g.idempotent_global(f)) ==
               g.lattice_order().leq(e, f);
          if (!ok) {
            witness = "(" + g.idempotents().universe()->name(e) + ", " +
                      g.idempotents().universe()->name(f) + ")";
          }
        }
      }
      add("natural_order_restricts_to_lattice", ok,
          ok ? "exhaustive " + std::to_string(m * m)
             : "failed at " + witness);
    }
    {
      // Independent route: multiply t by every idempotent of L, not just
      // those below q(t), and compare against the stored downset.
      bool ok = true;
      std::string witness;
      std::vector<Index> translated;
      for (Index t = 0; t < n && ok; ++t) {
        translated.clear();
        for (Index x = 0; x < m; ++x) {
          translated.push_back(
              g.multiply(static_cast<Index>(t), g.idempotent_global(x)));
        }
        std::sort(translated.begin(), translated.end());
        translated.erase(
            std::unique(translated.begin(), translated.end()),
            translated.end());
        const auto down = order->downset(static_cast<Index>(t));
        ok = translated.size() == down.size() &&
             std::equal(translated.begin(), translated.end(), down.begin());
        if (!ok) witness = g.universe()->name(static_cast<Index>(t));
      }
      add("downset_translation", ok,
          ok ? "exhaustive " + std::to_string(n) : "failed at " + witness);
    }
    {
      bool ok = true;
      std::string witness;
      std::vector<Index> per_component(m);
      for (Index t = 0; t < n && ok; ++t) {
        std::fill(per_component.begin(), per_component.end(), Index{0});
        for (Index s : order->downset(static_cast<Index>(t))) {
          const Index f = g.component_of(s);
          ++per_component[f];
          ok = ok && per_component[f] <= 1 &&
               s == g.multiply(static_cast<Index>(t),
                               g.idempotent_global(f));
        }
        if (!ok) witness = g.universe()->name(static_cast<Index>(t));
      }
      add("downset_meets_component_once", ok,
          ok ? "exhaustive " + std::to_string(n) : "failed at " + witness);
    }
    rep.local_constant = local_finiteness_constant(*order);
    add("local_constant_transfer",
        rep.local_constant == local_finiteness_constant(g.lattice_order()),
        "constant " + std::to_string(rep.local_constant));
  }

  {
    const auto t = detail::budget_ids(n * n, 1, opt.work_cap, opt.sample_size,
                                      0xc11f0003u);
    const auto scan = scan_ids(t, [&](std::size_t id) {
      const Index s = static_cast<Index>(id / n);
      const Index u = static_cast<Index>(id % n);
      const L1Vector es = L1Vector::unit(g.universe(), s);
      const L1Vector eu = L1Vector::unit(g.universe(), u);
      const L1Vector prod = L1Vector::unit(g.universe(), g.multiply(s, u));
      detail::Scan r;
      r.ok = schutz_clifford(g, prod) ==
             block_multiply(g, schutz_clifford(g, es), schutz_clifford(g, eu));
      if (!r.ok) r.witness = id;
      return r;
    });
    id_verdict("block_schutz_homomorphism", t, n * n, scan, pair_name);
  }

  {
    bool ok = true;
    std::string witness;
    for (Index t = 0; t < n && ok; ++t) {
      const L1Vector et = L1Vector::unit(g.universe(), static_cast<Index>(t));
      const BlockVector dt =
          BlockVector::unit(g.universe(), static_cast<Index>(t));
      ok = schutz_clifford_inverse(g, schutz_clifford(g, et)) == et &&
           schutz_clifford(g, schutz_clifford_inverse(g, dt)) == dt;
      if (!ok) witness = g.universe()->name(static_cast<Index>(t));
    }
    add("block_schutz_roundtrip", ok,
        ok ? "exhaustive " + std::to_string(n) : "failed at " + witness);
  }

  {
    const CheckResult r = retraction_check(g);
    add("retraction_algebra_map", r.pass, r.detail);
  }

  {
    // On idempotent basis vectors the blockwise map must reproduce the
    // plain semilattice picture: the indicator of the downset in L.
    bool ok = true;
    std::string witness;
    for (Index e = 0; e < m && ok; ++e) {
      const BlockVector img = schutz_clifford(
          g, L1Vector::unit(g.universe(), g.idempotent_global(e)));
      BlockVector expect(g.universe());
      for (Index f : g.idempotents().downset_of(e)) {
        expect.set(g.idempotent_global(f), 1);
      }
      ok = img == expect;
      if (!ok) witness = g.idempotents().universe()->name(e);
    }
    add("idempotent_basis_matches_lattice", ok,
        ok ? "exhaustive " + std::to_string(m) : "failed at " + witness);
  }

  return rep;
}

inline std::string render_text(const CliffordReport& rep) {
  std::string out = "semialg clifford report\n";
  out += "input: " + rep.input_label + "\n";
  out += "idempotents: " + std::to_string(rep.idempotent_count) + "\n";
  out += "elements: " + std::to_string(rep.element_count) + "\n";
  out += "components:";
  for (const auto& [name, size] : rep.component_sizes) {
    out += " " + name + ":" + std::to_string(size);
  }
  out += "\n";
  out += "local_finiteness_constant: " + std::to_string(rep.local_constant) +
         "\n";
  for (const auto& v : rep.verdicts) {
    out += "check " + v.name + ": ";
    out += to_string(v.state);
    if (!v.detail.empty()) out += " (" + v.detail + ")";
    out += "\n";
  }
  out += std::string("result: ") + (rep.all_pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace semialg
