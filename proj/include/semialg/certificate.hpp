// The certificate report: recomputes the norm identities and bounds for
// the Schutzenberger representation of one semilattice instance and
// records a verdict per check. All constants are exact rationals or big
// integers, so a verdict can be re-derived from the reported values.
//
// Large instances are handled by a deterministic budget: when the
// estimated cost of an exhaustive pass exceeds `work_cap`, the check runs
// on a fixed-seed sample instead and says so in its detail. The decision
// and the sample depend only on the instance and the options, never on
// the thread count, so reports are byte-identical across parallelism
// settings.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "diagonal_oracle.hpp"
#include "parallel.hpp"
#include "schutz.hpp"
#include "verdict.hpp"

namespace semialg {

struct CertificateReport {
  std::string input_label;
  Index elements = 0;
  std::optional<std::string> zero_name;
  std::optional<std::string> identity_name;
  std::size_t local_constant = 0;
  std::size_t order_height = 0;
  Rational norm_sigma;
  Rational norm_sigma_inv;
  Rational sum_mu_squared;
  BigInt two_pow_card_minus_1;
  BigInt two_pow_c_minus_1;
  std::optional<Rational> norm_delta;
  std::optional<std::string> note;
  std::vector<Verdict> verdicts;

  bool all_pass() const {
    for (const auto& v : verdicts) {
      if (v.state == Verdict::State::fail) return false;
    }
    return true;
  }
};

struct CertificateOptions {
  unsigned threads = 1;
  bool run_oracle = false;
  Index oracle_max_dim = 6;
  // Checks whose exhaustive cost estimate exceeds this fall back to a
  // fixed-seed sample; the diagonal is omitted when its support estimate
  // exceeds it.
  std::size_t work_cap = 4'000'000;
  std::size_t sample_size = 1000;
  std::optional<std::string> note;
};

namespace detail {

// Either every index (cost within budget) or a fixed-seed sample whose
// size shrinks with the per-element cost estimate.
struct Targets {
  std::vector<Index> list;
  bool exhaustive = true;
};

template <typename CostFn>
Targets budget_targets(Index n, CostFn&& cost_of, std::size_t work_cap,
                       std::size_t sample_size, std::uint32_t seed) {
  Targets t;
  std::size_t total = 0;
  bool over = false;
  for (Index i = 0; i < n && !over; ++i) {
    total += cost_of(i);
    if (total > work_cap) over = true;
  }
  if (!over) {
    t.list.resize(n);
    for (Index i = 0; i < n; ++i) t.list[i] = i;
    return t;
  }
  t.exhaustive = false;
  std::size_t worst = 1;
  for (Index i = 0; i < n; ++i) worst = std::max(worst, cost_of(i));
  std::size_t k = std::max<std::size_t>(1, work_cap / worst);
  k = std::min({k, sample_size, static_cast<std::size_t>(n)});
  std::mt19937 gen(seed);
  t.list.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    t.list.push_back(static_cast<Index>(gen() % n));
  }
  return t;
}

inline std::string mode_detail(const Targets& t, Index n) {
  if (t.exhaustive) return "exhaustive " + std::to_string(n);
  return "sampled " + std::to_string(t.list.size()) + " of " +
         std::to_string(n);
}

}  // namespace detail

template <Semilattice S>
CertificateReport certificate(const SchutzContext<S>& ctx,
                              CertificateOptions opt = {}) {
  const Index n = ctx.size();
  const Poset& p = ctx.order();
  const MobiusTable& mu = ctx.mobius_table();
  const UniversePtr u = ctx.universe();
  const std::size_t c = ctx.local_constant();

  CertificateReport rep;
  rep.elements = n;
  rep.local_constant = c;
  rep.order_height = height(p);
  rep.note = opt.note;

  std::optional<Index> zero;
  try {
    zero = ctx.semilattice().zero();
  } catch (const NoZeroElementError&) {
  }
  const std::optional<Index> id = ctx.semilattice().identity();
  if (zero) rep.zero_name = u->name(*zero);
  if (id) rep.identity_name = u->name(*id);

  // Exact constants. The operator norm of Sigma is the largest downset
  // cardinality; the norm of the inverse is the largest absolute Mobius
  // row sum; both are read off the precomputed order.
  rep.norm_sigma = Rational(static_cast<unsigned long>(c));
  Rational inv_norm = 0;
  Rational mu_sq = 0;
  for (Index x = 0; x < n; ++x) {
    Rational row = 0;
    for (const Rational& v : mu.values_for(x)) {
      row += abs(v);
      mu_sq += v * v;
    }
    if (row > inv_norm) inv_norm = row;
  }
  rep.norm_sigma_inv = inv_norm;
  rep.sum_mu_squared = mu_sq;
  rep.two_pow_card_minus_1 = pow2(n >= 1 ? n - 1 : 0);
  rep.two_pow_c_minus_1 = pow2(c >= 1 ? c - 1 : 0);

  const auto down_size = [&](Index x) { return p.downset(x).size(); };
  const auto add = [&](std::string name, Verdict::State st,
                       std::string detail) {
    rep.verdicts.push_back({std::move(name), st, std::move(detail)});
  };
  const auto run_scan = [&](const detail::Targets& targets, auto&& check) {
    return map_reduce_indices(
        targets.list.size(), detail::Scan{},
        [&](std::size_t i) { return check(targets.list[i]); },
        detail::combine_scans, opt.threads);
  };
  const auto elem_verdict = [&](std::string name, const detail::Targets& t,
                                const detail::Scan& scan,
                                std::string extra = {}) {
    std::string detail = detail::mode_detail(t, n);
    if (!extra.empty()) detail += ", " + extra;
    if (scan.ok) {
      add(std::move(name), Verdict::State::pass, detail);
    } else {
      add(std::move(name), Verdict::State::fail,
          detail + ", failed at " +
              u->name(static_cast<Index>(*scan.witness)));
    }
  };

  add("zero_element_exists",
      zero ? Verdict::State::pass : Verdict::State::fail,
      zero ? "zero is " + *rep.zero_name : "no zero element found");

  // Sigma images match downset indicators; the norm is attained.
  {
    const auto t = detail::budget_targets(n, down_size, opt.work_cap,
                                          opt.sample_size, 0x5eed0001u);
    detail::Scan scan = run_scan(t, [&](Index x) {
      detail::Scan s;
      const L1Vector img = schutz_apply(ctx, L1Vector::unit(u, x));
      bool ok = img.l1_norm() == Rational(down_size(x));
      for (const auto& [y, cv] : img.coeffs()) {
        ok = ok && cv == 1 && p.leq(y, x);
      }
      s.ok = ok;
      if (!ok) s.witness = x;
      s.max_value = img.support_size();
      return s;
    });
    if (t.exhaustive && scan.ok && scan.max_value != c) {
      scan.ok = false;
      scan.witness = 0;
    }
    elem_verdict("sigma_norm_equals_max_downset", t, scan);
  }

  add("sigma_norm_equals_cardinality",
      id ? (rep.norm_sigma == Rational(static_cast<unsigned long>(n))
                ? Verdict::State::pass
                : Verdict::State::fail)
         : Verdict::State::skipped,
      id ? "unital instance" : "not unital");

  add("sigma_norm_le_local_constant",
      rep.norm_sigma <= Rational(static_cast<unsigned long>(c))
          ? Verdict::State::pass
          : Verdict::State::fail,
      "");

  add("sigma_inv_norm_le_two_pow_card",
      rep.norm_sigma_inv <= Rational(rep.two_pow_card_minus_1)
          ? Verdict::State::pass
          : Verdict::State::fail,
      "");

  // Per-basis bound from local finiteness: each inverse image has norm at
  // most 2^(C-1). Mobius rows are already in hand, so this is exhaustive.
  {
    detail::Scan scan;
    const Rational bound(rep.two_pow_c_minus_1);
    for (Index x = 0; x < n; ++x) {
      Rational row = 0;
      for (const Rational& v : mu.values_for(x)) row += abs(v);
      if (row > bound) {
        scan.ok = false;
        scan.witness = x;
        break;
      }
    }
    add("basis_inverse_norm_le_two_pow_C",
        scan.ok ? Verdict::State::pass : Verdict::State::fail,
        scan.ok ? "exhaustive " + std::to_string(n)
                : "failed at " +
                      u->name(static_cast<Index>(*scan.witness)));
  }

  const auto quad_cost = [&](Index x) {
    const std::size_t d = down_size(x);
    return d * d;
  };

  // The locally computed inverse agrees with the global Mobius route.
  {
    const auto t = detail::budget_targets(n, quad_cost, opt.work_cap,
                                          opt.sample_size, 0x5eed0002u);
    const detail::Scan scan = run_scan(t, [&](Index x) {
      detail::Scan s;
      const L1Vector d = L1Vector::unit(u, x);
      s.ok = local_inverse_apply(ctx, d) == schutz_inverse_apply(ctx, d);
      if (!s.ok) s.witness = x;
      return s;
    });
    elem_verdict("local_inverse_matches_global", t, scan);
  }

  // Two-sided round trip, mixing the local and the global inverse routes.
  {
    const auto t = detail::budget_targets(n, quad_cost, opt.work_cap,
                                          opt.sample_size, 0x5eed0003u);
    const detail::Scan scan = run_scan(t, [&](Index x) {
      detail::Scan s;
      const L1Vector d = L1Vector::unit(u, x);
      s.ok = schutz_apply(ctx, local_inverse_apply(ctx, d)) == d &&
             schutz_inverse_apply(ctx, schutz_apply(ctx, d)) == d;
      if (!s.ok) s.witness = x;
      return s;
    });
    elem_verdict("roundtrip_two_sided", t, scan);
  }

  // Primitive idempotents hit the pointwise basis and square to
  // themselves; their norms equal the inverse image norms.
  {
    const auto cubic_cost = [&](Index x) {
      const std::size_t d = down_size(x);
      return d * d * d;
    };
    const auto t = detail::budget_targets(n, cubic_cost, opt.work_cap,
                                          opt.sample_size, 0x5eed0004u);
    const detail::Scan scan = run_scan(t, [&](Index x) {
      detail::Scan s;
      const L1Vector r = primitive_idempotent(ctx, x);
      s.ok = schutz_apply(ctx, r) == L1Vector::unit(u, x) &&
             convolve(ctx.semilattice(), r, r) == r &&
             r == schutz_inverse_apply(ctx, L1Vector::unit(u, x));
      if (!s.ok) s.witness = x;
      return s;
    });
    elem_verdict("primitive_idempotents", t, scan);
  }

  // Diagonal section (unital only, and only when the support estimate
  // fits the budget).
  std::optional<TensorVector> delta;
  std::string delta_skip = "not unital";
  if (id) {
    std::size_t cost = 0;
    bool over = false;
    for (Index x = 0; x < n && !over; ++x) {
      cost += quad_cost(x);
      if (cost > opt.work_cap) over = true;
    }
    if (over) {
      delta_skip = "diagonal not computed (size cap)";
    } else {
      delta = diagonal(ctx);
      rep.norm_delta = delta->l1_norm();
    }
  }
  const auto delta_verdict = [&](std::string name, auto&& predicate) {
    if (!delta) {
      add(std::move(name), Verdict::State::skipped, delta_skip);
      return;
    }
    add(std::move(name),
        predicate() ? Verdict::State::pass : Verdict::State::fail, "");
  };

  if (delta) {
    // e_f . delta = delta . e_f for every f, and pi(delta) = e_identity.
    const auto t = detail::budget_targets(
        n, [&](Index) { return delta->support_size(); }, opt.work_cap,
        opt.sample_size, 0x5eed0005u);
    detail::Scan scan = run_scan(t, [&](Index f) {
      detail::Scan s;
      s.ok = tensor_left_act(ctx.semilattice(), f, *delta) ==
             tensor_right_act(ctx.semilattice(), *delta, f);
      if (!s.ok) s.witness = f;
      return s;
    });
    const bool pi_ok =
        pi(ctx.semilattice(), *delta) == L1Vector::unit(u, *id);
    if (!pi_ok && scan.ok) {
      scan.ok = false;
      scan.witness = *id;
    }
    elem_verdict("diagonal_axioms", t, scan,
                 pi_ok ? "pi gives identity" : "pi misses identity");
  } else {
    add("diagonal_axioms", Verdict::State::skipped, delta_skip);
  }

  delta_verdict("delta_norm_ge_mu_square_sum",
                [&] { return *rep.norm_delta >= rep.sum_mu_squared; });
  add("mu_square_sum_ge_cardinality",
      rep.sum_mu_squared >= Rational(static_cast<unsigned long>(n))
          ? Verdict::State::pass
          : Verdict::State::fail,
      "");
  delta_verdict("cardinality_le_delta_norm", [&] {
    return Rational(static_cast<unsigned long>(n)) <= *rep.norm_delta;
  });
  delta_verdict("sigma_inv_norm_le_delta_norm",
                [&] { return rep.norm_sigma_inv <= *rep.norm_delta; });
  delta_verdict("sigma_inv_sq_le_card_times_delta", [&] {
    return rep.norm_sigma_inv * rep.norm_sigma_inv <=
           Rational(static_cast<unsigned long>(n)) * *rep.norm_delta;
  });

  if (!opt.run_oracle) {
    add("diagonal_oracle_match", Verdict::State::skipped,
        "oracle not requested");
  } else if (!id) {
    add("diagonal_oracle_match", Verdict::State::skipped, "not unital");
  } else if (n > opt.oracle_max_dim) {
    add("diagonal_oracle_match", Verdict::State::skipped,
        "dimension exceeds oracle bound " +
            std::to_string(opt.oracle_max_dim));
  } else {
    const DiagonalSolution sol =
        diagonal_bruteforce(ctx.semilattice(), {opt.oracle_max_dim});
    const bool ok = delta && sol.unique && sol.delta == *delta;
    add("diagonal_oracle_match",
        ok ? Verdict::State::pass : Verdict::State::fail,
        sol.unique ? "solution unique" : "solution not unique");
  }

  return rep;
}

inline std::string render_text(const CertificateReport& rep) {
  std::ostringstream out;
  out << "semialg certificate\n";
  out << "input: " << rep.input_label << '\n';
  out << "elements: " << rep.elements << '\n';
  out << "zero: " << (rep.zero_name ? *rep.zero_name : "none") << '\n';
  out << "identity: " << (rep.identity_name ? *rep.identity_name : "none")
      << '\n';
  out << "local_finiteness_constant: " << rep.local_constant << '\n';
  out << "height: " << rep.order_height << '\n';
  out << "norm_sigma: " << format_rational(rep.norm_sigma) << '\n';
  out << "norm_sigma_inv: " << format_rational(rep.norm_sigma_inv) << '\n';
  out << "sum_mu_squared: " << format_rational(rep.sum_mu_squared) << '\n';
  out << "two_pow_card_minus_1: " << rep.two_pow_card_minus_1.str() << '\n';
  out << "two_pow_C_minus_1: " << rep.two_pow_c_minus_1.str() << '\n';
  if (rep.norm_delta) {
    out << "norm_delta: " << format_rational(*rep.norm_delta) << '\n';
  }
  if (rep.note) out << "note: " << *rep.note << '\n';
  for (const auto& v : rep.verdicts) {
    out << "check " << v.name << ": " << to_string(v.state);
    if (!v.detail.empty()) out << " (" << v.detail << ")";
    out << '\n';
  }
  out << "result: " << (rep.all_pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace semialg
