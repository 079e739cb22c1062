#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>

#include "semialg/certificate.hpp"
#include "semialg/families.hpp"
#include "semialg/report_json.hpp"
#include "semialg/schutz.hpp"

using namespace semialg;

namespace {

const Verdict& verdict_named(const CertificateReport& rep,
                             const std::string& name) {
  const auto it =
      std::find_if(rep.verdicts.begin(), rep.verdicts.end(),
                   [&](const Verdict& v) { return v.name == name; });
  REQUIRE(it != rep.verdicts.end());
  return *it;
}

const std::vector<std::string> kCheckNames = {
    "zero_element_exists",
    "sigma_norm_equals_max_downset",
    "sigma_norm_equals_cardinality",
    "sigma_norm_le_local_constant",
    "sigma_inv_norm_le_two_pow_card",
    "basis_inverse_norm_le_two_pow_C",
    "local_inverse_matches_global",
    "roundtrip_two_sided",
    "primitive_idempotents",
    "diagonal_axioms",
    "delta_norm_ge_mu_square_sum",
    "mu_square_sum_ge_cardinality",
    "cardinality_le_delta_norm",
    "sigma_inv_norm_le_delta_norm",
    "sigma_inv_sq_le_card_times_delta",
    "diagonal_oracle_match",
};

}  // namespace

TEST_CASE("two-chain report: every constant frozen") {
  const SchutzContext ctx(ChainSemilattice(2));
  CertificateOptions opt;
  opt.run_oracle = true;
  const CertificateReport rep = certificate(ctx, opt);

  CHECK(rep.elements == 2);
  REQUIRE(rep.zero_name);
  CHECK(*rep.zero_name == "c1");
  REQUIRE(rep.identity_name);
  CHECK(*rep.identity_name == "c2");
  CHECK(rep.local_constant == 2);
  CHECK(rep.order_height == 1);
  CHECK(rep.norm_sigma == 2);
  CHECK(rep.norm_sigma_inv == 2);
  CHECK(rep.sum_mu_squared == 3);
  CHECK(rep.two_pow_card_minus_1 == 2);
  CHECK(rep.two_pow_c_minus_1 == 2);
  REQUIRE(rep.norm_delta);
  CHECK(*rep.norm_delta == 5);
  CHECK_FALSE(rep.note);

  REQUIRE(rep.verdicts.size() == kCheckNames.size());
  for (std::size_t i = 0; i < kCheckNames.size(); ++i) {
    CHECK(rep.verdicts[i].name == kCheckNames[i]);
    CHECK(rep.verdicts[i].state == Verdict::State::pass);
  }
  CHECK(rep.all_pass());
  CHECK(verdict_named(rep, "diagonal_oracle_match").detail ==
        "solution unique");
}

TEST_CASE("two-chain text rendering is frozen byte for byte") {
  const SchutzContext ctx(ChainSemilattice(2));
  CertificateOptions opt;
  opt.run_oracle = true;
  CertificateReport rep = certificate(ctx, opt);
  rep.input_label = "chain(2)";

  const std::string expected =
      "semialg certificate\n"
      "input: chain(2)\n"
      "elements: 2\n"
      "zero: c1\n"
      "identity: c2\n"
      "local_finiteness_constant: 2\n"
      "height: 1\n"
      "norm_sigma: 2/1\n"
      "norm_sigma_inv: 2/1\n"
      "sum_mu_squared: 3/1\n"
      "two_pow_card_minus_1: 2\n"
      "two_pow_C_minus_1: 2\n"
      "norm_delta: 5/1\n"
      "check zero_element_exists: pass (zero is c1)\n"
      "check sigma_norm_equals_max_downset: pass (exhaustive 2)\n"
      "check sigma_norm_equals_cardinality: pass (unital instance)\n"
      "check sigma_norm_le_local_constant: pass\n"
      "check sigma_inv_norm_le_two_pow_card: pass\n"
      "check basis_inverse_norm_le_two_pow_C: pass (exhaustive 2)\n"
      "check local_inverse_matches_global: pass (exhaustive 2)\n"
      "check roundtrip_two_sided: pass (exhaustive 2)\n"
      "check primitive_idempotents: pass (exhaustive 2)\n"
      "check diagonal_axioms: pass (exhaustive 2, pi gives identity)\n"
      "check delta_norm_ge_mu_square_sum: pass\n"
      "check mu_square_sum_ge_cardinality: pass\n"
      "check cardinality_le_delta_norm: pass\n"
      "check sigma_inv_norm_le_delta_norm: pass\n"
      "check sigma_inv_sq_le_card_times_delta: pass\n"
      "check diagonal_oracle_match: pass (solution unique)\n"
      "result: PASS\n";
  CHECK(render_text(rep) == expected);
}

TEST_CASE("non-unital instances skip the unital-only checks") {
  const SchutzContext ctx(FanSemilattice(100));
  CertificateOptions opt;
  opt.run_oracle = true;
  const CertificateReport rep = certificate(ctx, opt);

  CHECK(rep.elements == 101);
  CHECK(*rep.zero_name == "theta");
  CHECK_FALSE(rep.identity_name);
  CHECK(rep.local_constant == 2);
  CHECK(rep.norm_sigma == 2);
  CHECK(rep.norm_sigma_inv == 2);
  CHECK(rep.sum_mu_squared == 201);
  CHECK(rep.two_pow_card_minus_1 == pow2(100));
  CHECK_FALSE(rep.norm_delta);

  for (const char* name :
       {"sigma_norm_equals_cardinality", "diagonal_axioms",
        "delta_norm_ge_mu_square_sum", "cardinality_le_delta_norm",
        "sigma_inv_norm_le_delta_norm", "sigma_inv_sq_le_card_times_delta",
        "diagonal_oracle_match"}) {
    const Verdict& v = verdict_named(rep, name);
    CHECK(v.state == Verdict::State::skipped);
    CHECK(v.detail == "not unital");
  }
  // The mu-square lower bound needs no diagonal and still runs.
  CHECK(verdict_named(rep, "mu_square_sum_ge_cardinality").state ==
        Verdict::State::pass);
  CHECK(rep.all_pass());
}

TEST_CASE("reports are byte-identical across thread counts") {
  const SchutzContext ctx(ChainSemilattice(30));
  CertificateOptions base;
  const std::string one = render_text(certificate(ctx, base));
  for (unsigned threads : {2u, 3u, 4u, 8u}) {
    CertificateOptions opt;
    opt.threads = threads;
    CHECK(render_text(certificate(ctx, opt)) == one);
  }
}

TEST_CASE("a tiny work cap switches element scans to fixed samples") {
  const SchutzContext ctx(ChainSemilattice(30));
  CertificateOptions opt;
  opt.work_cap = 50;
  opt.sample_size = 5;
  const CertificateReport rep = certificate(ctx, opt);

  CHECK(verdict_named(rep, "sigma_norm_equals_max_downset").detail ==
        "sampled 1 of 30");
  // The diagonal support estimate exceeds the cap, so the diagonal section
  // is skipped rather than sampled.
  CHECK_FALSE(rep.norm_delta);
  for (const char* name :
       {"diagonal_axioms", "delta_norm_ge_mu_square_sum",
        "cardinality_le_delta_norm", "sigma_inv_norm_le_delta_norm",
        "sigma_inv_sq_le_card_times_delta"}) {
    const Verdict& v = verdict_named(rep, name);
    CHECK(v.state == Verdict::State::skipped);
    CHECK(v.detail == "diagonal not computed (size cap)");
  }
  CHECK(rep.all_pass());

  // Sampling is deterministic: same options, same bytes.
  CHECK(render_text(certificate(ctx, opt)) ==
        render_text(certificate(ctx, opt)));
}

TEST_CASE("oracle verdict states") {
  SECTION("requested and in range: pass, uniquely") {
    const SchutzContext ctx(ChainSemilattice(4));
    CertificateOptions opt;
    opt.run_oracle = true;
    const CertificateReport rep = certificate(ctx, opt);
    const Verdict& v = verdict_named(rep, "diagonal_oracle_match");
    CHECK(v.state == Verdict::State::pass);
    CHECK(v.detail == "solution unique");
  }
  SECTION("not requested") {
    const SchutzContext ctx(ChainSemilattice(4));
    const CertificateReport rep = certificate(ctx);
    const Verdict& v = verdict_named(rep, "diagonal_oracle_match");
    CHECK(v.state == Verdict::State::skipped);
    CHECK(v.detail == "oracle not requested");
  }
  SECTION("dimension over the bound") {
    const SchutzContext ctx(
        ChainSemilattice(7, ChainSemilattice::Naming::numeric));
    CertificateOptions opt;
    opt.run_oracle = true;
    const CertificateReport rep = certificate(ctx, opt);
    const Verdict& v = verdict_named(rep, "diagonal_oracle_match");
    CHECK(v.state == Verdict::State::skipped);
    CHECK(v.detail == "dimension exceeds oracle bound 6");
  }
  SECTION("a raised bound lets the same instance through") {
    const SchutzContext ctx(
        ChainSemilattice(7, ChainSemilattice::Naming::numeric));
    CertificateOptions opt;
    opt.run_oracle = true;
    opt.oracle_max_dim = 8;
    const CertificateReport rep = certificate(ctx, opt);
    const Verdict& v = verdict_named(rep, "diagonal_oracle_match");
    CHECK(v.state == Verdict::State::pass);
  }
}

TEST_CASE("a corrupted product table fails the certificate honestly") {
  // Diamond order made inconsistent: a*b = a but b*a = z. The derived
  // downsets still form a valid order (a chain), so every order-only check
  // passes, but the primitive idempotent at b no longer maps to delta_b
  // under Sigma.
  const TableSemilattice s(
      make_universe({"z", "a", "b", "t"}),
      {0, 0, 0, 0,  //
       0, 1, 1, 1,  //
       0, 0, 2, 2,  //
       0, 1, 2, 3},
      Validate::no);
  const SchutzContext ctx(s);
  const CertificateReport rep = certificate(ctx);

  CHECK_FALSE(rep.all_pass());
  const Verdict& bad = verdict_named(rep, "primitive_idempotents");
  CHECK(bad.state == Verdict::State::fail);
  CHECK(bad.detail.find("failed at b") != std::string::npos);
  // The order-derived constants are still reported.
  CHECK(*rep.zero_name == "z");
  CHECK(*rep.identity_name == "t");
  CHECK(verdict_named(rep, "local_inverse_matches_global").state ==
        Verdict::State::pass);
}

TEST_CASE("a note is carried into the report and its renderings") {
  const SchutzContext ctx(PairedFanSemilattice(2));
  CertificateOptions opt;
  opt.note = family_note(FamilyKind::paper_s).value_or("");
  CertificateReport rep = certificate(ctx, opt);
  rep.input_label = "paper_s(2)";
  REQUIRE(rep.note);
  const std::string text = render_text(rep);
  CHECK(text.find("note: " + *rep.note + "\n") != std::string::npos);

  const ordered_json j = render_json(rep);
  CHECK(j["report"] == "certificate");
  CHECK(j["input"] == "paper_s(2)");
  CHECK(j["note"] == *rep.note);
  CHECK(j["result"] == "pass");
  CHECK(j["checks"].size() == kCheckNames.size());
  CHECK(j["checks"][0]["name"] == "zero_element_exists");
}

TEST_CASE("json rendering freezes values as p/q strings") {
  const SchutzContext ctx(ChainSemilattice(2));
  CertificateOptions opt;
  opt.run_oracle = true;
  CertificateReport rep = certificate(ctx, opt);
  rep.input_label = "chain(2)";
  const ordered_json j = render_json(rep);
  CHECK(j["elements"] == 2);
  CHECK(j["zero"] == "c1");
  CHECK(j["identity"] == "c2");
  CHECK(j["norm_sigma"] == "2/1");
  CHECK(j["norm_sigma_inv"] == "2/1");
  CHECK(j["sum_mu_squared"] == "3/1");
  CHECK(j["two_pow_card_minus_1"] == "2");
  CHECK(j["norm_delta"] == "5/1");
  CHECK(j["note"].is_null());
  CHECK(j["result"] == "pass");
  // Non-unital: null diagonal norm.
  const SchutzContext fan_ctx(FanSemilattice(3));
  CHECK(render_json(certificate(fan_ctx))["norm_delta"].is_null());
}
