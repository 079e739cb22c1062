#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "semialg/families.hpp"
#include "semialg/io.hpp"

using namespace semialg;

namespace {

TableSemilattice parse(const std::string& text,
                       Validate validate = Validate::yes) {
  std::istringstream in(text);
  return parse_semilattice_text(in, validate);
}

CliffordSemigroup parse_clifford(const std::string& text) {
  std::istringstream in(text);
  return parse_clifford_text(in, Validate::yes);
}

/// Expects `fn()` to throw ParseError at the given line with the given
/// message fragment.
template <typename Fn>
void expect_parse_error(Fn&& fn, std::size_t line, const std::string& what) {
  try {
    fn();
    FAIL("expected ParseError(" << line << ", ~\"" << what << "\")");
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring(what));
  }
}

const std::string kCliffordBase =
    "clifford\n"
    "symmetric\n"
    "elements c1 c2 c3\n"
    "product c1 c2 c1\n"
    "product c1 c3 c1\n"
    "product c2 c3 c2\n";  // six lines; extras start at line 7

}  // namespace

TEST_CASE("explicit product lists parse to the right table") {
  const TableSemilattice s = parse(
      "semilattice\n"
      "elements a b\n"
      "product a a a\n"
      "product a b a\n"
      "product b a a\n"
      "product b b b\n");
  REQUIRE(s.size() == 2);
  CHECK(s.universe()->name(0) == "a");
  CHECK(s.product(0, 1) == 0);
  CHECK(s.zero() == 0);
  CHECK(s.identity() == std::optional<Index>{1});
}

TEST_CASE("symmetric mode mirrors pairs and fills the diagonal") {
  const TableSemilattice s = parse(
      "semilattice\n"
      "symmetric\n"
      "elements theta x y\n"
      "product x y theta\n"
      "product theta x theta\n"
      "product theta y theta\n");
  REQUIRE(s.size() == 3);
  CHECK(s.product(1, 2) == 0);
  CHECK(s.product(2, 1) == 0);
  CHECK(s.product(1, 1) == 1);
  CHECK(s.product(0, 0) == 0);
  CHECK_FALSE(s.identity());
}

TEST_CASE("comments and blank lines do not shift reported line numbers") {
  expect_parse_error(
      [] {
        parse(
            "# a heading comment\n"
            "\n"
            "semilattice\n"
            "elements a b  # trailing comment\n"
            "product a c a\n");
      },
      5, "unknown element: c");
}

TEST_CASE("semilattice parse errors carry their line") {
  expect_parse_error([] { parse("semilatice\n"); }, 1,
                     "expected 'semilattice' header");
  expect_parse_error([] { parse(""); }, 1, "expected 'semilattice' header");
  expect_parse_error([] { parse("semilattice\nelements a a\n"); }, 2,
                     "duplicate element name: a");
  expect_parse_error([] { parse("semilattice\nelements\n"); }, 2,
                     "elements line names no elements");
  expect_parse_error(
      [] {
        parse(
            "semilattice\n"
            "elements a\n"
            "product a a a\n"
            "elements b\n");
      },
      4, "elements must be declared before products");
  expect_parse_error([] { parse("semilattice\nsymmetric b\n"); }, 2,
                     "symmetric takes no arguments");
  expect_parse_error(
      [] {
        parse(
            "semilattice\n"
            "elements a\n"
            "product a a a\n"
            "symmetric\n");
      },
      4, "symmetric must precede the products");
  expect_parse_error(
      [] {
        parse(
            "semilattice\n"
            "elements a\n"
            "product a a\n");
      },
      3, "product lines read: product <x> <y> <x*y>");
  expect_parse_error([] { parse("semilattice\nproduct a a a\n"); }, 2,
                     "no elements declared");
  expect_parse_error(
      [] {
        parse(
            "semilattice\n"
            "elements a b\n"
            "product a b a\n"
            "product a b a\n");
      },
      4, "product of a and b already specified");
  expect_parse_error(
      [] {
        parse(
            "semilattice\n"
            "symmetric\n"
            "elements a b\n"
            "product a b a\n"
            "product b a a\n");
      },
      5, "product of b and a already specified");
  expect_parse_error([] { parse("semilattice\nfoo bar\n"); }, 2,
                     "unknown directive 'foo'");
  // Clifford directives are not valid in a plain semilattice file.
  expect_parse_error(
      [] {
        parse(
            "semilattice\n"
            "elements a\n"
            "group a cyclic:2\n");
      },
      3, "unknown directive 'group'");
}

TEST_CASE("missing products are reported by name") {
  CHECK_THROWS_MATCHES(
      parse(
          "semilattice\n"
          "elements a b\n"
          "product a a a\n"
          "product a b a\n"
          "product b b b\n"),
      ValidationError,
      Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
          "product table incomplete: missing product b a")));
  // A file with a header and nothing else has no elements at all.
  CHECK_THROWS_MATCHES(
      parse("semilattice\n"), ValidationError,
      Catch::Matchers::MessageMatches(
          Catch::Matchers::ContainsSubstring("no elements declared")));
}

TEST_CASE("axiom validation applies unless explicitly skipped") {
  const std::string text =
      "semilattice\n"
      "elements a b\n"
      "product a a a\n"
      "product a b a\n"
      "product b a b\n"
      "product b b b\n";
  CHECK_THROWS_AS(parse(text), NotCommutativeError);
  const TableSemilattice s = parse(text, Validate::no);
  CHECK(s.product(0, 1) == 0);
  CHECK(s.product(1, 0) == 1);
}

TEST_CASE("written files parse back to the same instance") {
  for (const FamilyKind kind :
       {FamilyKind::chain, FamilyKind::fan, FamilyKind::fan_unital,
        FamilyKind::nmin, FamilyKind::paper_s}) {
    const AnySemilattice any = generate_family(kind, 5);
    std::visit(
        [&](const auto& s) {
          std::ostringstream out;
          write_semilattice_text(out, s, family_label(kind, 5),
                                 family_note(kind));
          INFO(out.str());
          const TableSemilattice back = parse(out.str());
          REQUIRE(back.size() == s.size());
          for (Index i = 0; i < s.size(); ++i) {
            CHECK(back.universe()->name(i) == s.universe()->name(i));
            for (Index j = 0; j < s.size(); ++j) {
              CHECK(back.product(i, j) == s.product(i, j));
            }
          }
        },
        any);
  }
}

TEST_CASE("the written form is canonical") {
  const ChainSemilattice s(2);
  std::ostringstream out;
  write_semilattice_text(out, s, "chain(2)", std::nullopt);
  CHECK(out.str() ==
        "# chain(2)\n"
        "semilattice\n"
        "symmetric\n"
        "elements c1 c2\n"
        "product c1 c2 c1\n");
  std::ostringstream with_note;
  write_semilattice_text(with_note, s, "chain(2)", std::string("caveat"));
  CHECK_THAT(with_note.str(),
             Catch::Matchers::ContainsSubstring("# note: caveat\n"));
}

TEST_CASE("long element lists wrap but still parse") {
  const FanSemilattice s(30);
  std::ostringstream out;
  write_semilattice_text(out, s, "fan(30)", std::nullopt);
  // 31 names at 12 per line.
  CHECK_THAT(out.str(), Catch::Matchers::ContainsSubstring(
                            "\nelements theta a1 a2 a3 a4 a5 a6 a7 a8 a9 "
                            "a10 a11\n"));
  const TableSemilattice back = parse(out.str());
  CHECK(back.size() == 31);
  CHECK(back.product(1, 2) == 0);
}

TEST_CASE("a clifford file builds the full semigroup") {
  const CliffordSemigroup g = parse_clifford(
      kCliffordBase +
      "group c2 cyclic:2\n"
      "group c3 cyclic:2\n"
      "phi c3 c2 : g1->g1\n"
      "phi c2 c1 : g1->e\n");
  REQUIRE(g.size() == 5);
  CHECK(g.universe()->name(2) == "c2.g1");
  CHECK(g.universe()->name(4) == "c3.g1");
  CHECK(g.multiply(4, 2) == 1);
  CHECK(g.multiply(4, 1) == 2);
  const CliffordReport rep = clifford_verify(g, "chain-c2");
  CHECK(rep.all_pass());
}

TEST_CASE("groups default to trivial and symmetric specs work") {
  const CliffordSemigroup g = parse_clifford(
      kCliffordBase +
      "group c3 symmetric:3\n"
      "phi c3 c2 : p132->e p213->e p231->e p312->e p321->e\n");
  CHECK(g.components() == 3);
  CHECK(g.group(0).size() == 1);
  CHECK(g.group(1).size() == 1);
  CHECK(g.group(2).size() == 6);
  CHECK(g.size() == 8);
  CHECK(clifford_verify(g, "s3-top").all_pass());
}

TEST_CASE("clifford directive errors carry their line") {
  expect_parse_error([] { parse_clifford(kCliffordBase + "group c2\n"); }, 7,
                     "group lines read: group <element> <spec>");
  expect_parse_error(
      [] { parse_clifford(kCliffordBase + "group cx cyclic:2\n"); }, 7,
      "unknown element: cx");
  expect_parse_error(
      [] {
        parse_clifford(kCliffordBase +
                       "group c2 cyclic:2\n"
                       "group c2 cyclic:2\n");
      },
      8, "group for c2 already specified");
  expect_parse_error(
      [] { parse_clifford(kCliffordBase + "group c2 dihedral:4\n"); }, 7,
      "unknown group spec 'dihedral:4'");
  expect_parse_error(
      [] { parse_clifford(kCliffordBase + "group c2 cyclic:x\n"); }, 7,
      "bad group order in 'cyclic:x'");
  expect_parse_error(
      [] { parse_clifford(kCliffordBase + "group c2 cyclic:0\n"); }, 7,
      "cyclic group order must be positive");
  expect_parse_error(
      [] {
        parse_clifford(kCliffordBase +
                       "group c3 cyclic:2\n"
                       "phi c3 c2 g1->g1\n");
      },
      8, "phi lines read: phi <upper> <lower> : <g>-><h> ...");
  expect_parse_error(
      [] {
        parse_clifford(kCliffordBase +
                       "group c3 cyclic:2\n"
                       "phi cx c2 : g1->e\n");
      },
      8, "unknown element: cx");
  expect_parse_error(
      [] {
        parse_clifford(kCliffordBase +
                       "group c3 cyclic:2\n"
                       "phi c3 c2 : g1=>e\n");
      },
      8, "expected <g>-><h>, got 'g1=>e'");
  expect_parse_error(
      [] {
        parse_clifford(kCliffordBase +
                       "group c3 cyclic:2\n"
                       "group c2 cyclic:2\n"
                       "phi c3 c2 : e->g1 g1->g1\n");
      },
      9, "the identity must map to the identity");
  expect_parse_error(
      [] {
        parse_clifford(kCliffordBase +
                       "group c3 cyclic:2\n"
                       "phi c3 c2 : g1->q\n");
      },
      8, "unknown group element: q");
  expect_parse_error(
      [] {
        parse_clifford(kCliffordBase +
                       "group c3 cyclic:3\n"
                       "phi c3 c2 : g1->e\n");
      },
      8, "missing image for g2");
  expect_parse_error(
      [] {
        parse_clifford(kCliffordBase +
                       "group c3 cyclic:2\n"
                       "phi c3 c2 : g1->e\n"
                       "phi c3 c2 : g1->e\n");
      },
      9, "structure map for c3 -> c2 already specified");
}

TEST_CASE("structural problems surface after parsing") {
  // The table section is fine but the cover pair c2 -> c1 has a
  // nontrivial upper group and no map.
  CHECK_THROWS_MATCHES(
      parse_clifford(kCliffordBase + "group c2 cyclic:2\n"), ValidationError,
      Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
          "missing structure map for cover pair c2 -> c1")));
  // phi on a pair that is not a cover of the lattice order; the cover
  // maps themselves are complete, so this is the only structural problem.
  CHECK_THROWS_MATCHES(
      parse_clifford(kCliffordBase +
                     "group c2 cyclic:2\n"
                     "group c3 cyclic:2\n"
                     "phi c3 c2 : g1->g1\n"
                     "phi c2 c1 : g1->e\n"
                     "phi c3 c1 : g1->e\n"),
      ValidationError,
      Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
          "c3 -> c1, which is not a cover pair")));
}
