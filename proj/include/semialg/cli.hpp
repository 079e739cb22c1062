// Command line front end. Verbs:
//
//   validate <input>          parse and validate, print a short summary
//   mobius <input>            Mobius function of the canonical order
//   schutz <input>            basis images of the representation
//   diagonal <input>          the diagonal tensor (unital instances)
//   certify <input>           full certificate report
//   gen <family> <n>          write a canonical input file to stdout
//   clifford-verify <input>   report for a Clifford instance
//
// <input> is a file path, "-" for stdin, or a family spec like "fan:100"
// (chain, fan, fan_unital, nmin, paper_s). Exit codes: 0 on success /
// all checks passing, 1 when a computed verdict fails, 2 on usage,
// parse, or validation errors (parse messages carry input:line:).

#pragma once

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "certificate.hpp"
#include "clifford.hpp"
#include "diagonal_oracle.hpp"
#include "families.hpp"
#include "io.hpp"
#include "report_json.hpp"
#include "schutz.hpp"

namespace semialg {

namespace cli_detail {

struct LoadedSemilattice {
  AnySemilattice instance;
  std::string label;
  std::optional<std::string> note;
};

template <typename Fn>
auto with_parse_location(const std::string& label, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw Error(label + ":" + std::to_string(e.line()) + ": " + e.what());
  }
}

inline LoadedSemilattice load_semilattice(const std::string& arg,
                                          Validate validate,
                                          std::istream& stdin_stream) {
  if (const auto spec = parse_family_spec(arg)) {
    return {generate_family(spec->kind, spec->n),
            family_label(spec->kind, spec->n), family_note(spec->kind)};
  }
  if (arg == "-") {
    return {with_parse_location(
                "-", [&] { return parse_semilattice_text(stdin_stream,
                                                         validate); }),
            "-", std::nullopt};
  }
  std::ifstream file(arg);
  if (!file) throw Error("cannot open input file: " + arg);
  return {with_parse_location(
              arg, [&] { return parse_semilattice_text(file, validate); }),
          arg, std::nullopt};
}

inline CliffordSemigroup load_clifford(const std::string& arg,
                                       Validate validate,
                                       std::istream& stdin_stream) {
  if (parse_family_spec(arg)) {
    throw Error("clifford input must be a file or '-', not a family spec");
  }
  if (arg == "-") {
    return with_parse_location(
        "-", [&] { return parse_clifford_text(stdin_stream, validate); });
  }
  std::ifstream file(arg);
  if (!file) throw Error("cannot open input file: " + arg);
  return with_parse_location(
      arg, [&] { return parse_clifford_text(file, validate); });
}

inline void emit_json(std::ostream& out, const ordered_json& j) {
  out << j.dump(2) << '\n';
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::istream& in,
                   std::ostream& out, std::ostream& err) {
  CLI::App app{"exact certificates for semilattice convolution algebras"};
  app.name("semialg");
  app.require_subcommand(1);

  std::string input = "-";
  bool json = false;
  bool skip_validate = false;
  bool inverse = false;
  bool oracle = false;
  Index oracle_bound = 6;
  unsigned threads = 1;
  std::string family;
  Index family_n = 1;

  const auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input,
                    "file path, '-' for stdin, or a family spec like fan:8");
    cmd->add_flag("--skip-validate", skip_validate,
                  "trust the input; skip the axiom checks");
    cmd->add_flag("--json", json, "emit JSON instead of text");
  };

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "parse and validate an instance");
  add_input(validate_cmd);

  CLI::App* mobius_cmd = app.add_subcommand(
      "mobius", "Mobius function of the canonical order");
  add_input(mobius_cmd);

  CLI::App* schutz_cmd =
      app.add_subcommand("schutz", "basis images of the representation");
  add_input(schutz_cmd);
  schutz_cmd->add_flag("--inverse", inverse, "images of the inverse map");

  CLI::App* diagonal_cmd =
      app.add_subcommand("diagonal", "diagonal tensor of a unital instance");
  add_input(diagonal_cmd);
  diagonal_cmd->add_flag("--oracle", oracle,
                         "also run the brute-force search and compare");
  diagonal_cmd->add_option("--oracle-bound", oracle_bound,
                           "largest dimension the oracle will attempt");

  CLI::App* certify_cmd =
      app.add_subcommand("certify", "full certificate report");
  add_input(certify_cmd);
  certify_cmd->add_flag("--oracle", oracle,
                        "include the brute-force diagonal comparison");
  certify_cmd->add_option("--oracle-bound", oracle_bound,
                          "largest dimension the oracle will attempt");
  certify_cmd->add_option("--threads", threads,
                          "worker threads for the exhaustive checks");

  CLI::App* gen_cmd =
      app.add_subcommand("gen", "write a canonical input file to stdout");
  gen_cmd->add_option("family", family, "chain | fan | fan_unital | nmin | paper_s")
      ->required();
  gen_cmd->add_option("n", family_n, "family size parameter")->required();

  CLI::App* clifford_cmd = app.add_subcommand(
      "clifford-verify", "verify and report on a Clifford instance");
  add_input(clifford_cmd);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Validate validate_mode =
      skip_validate ? Validate::no : Validate::yes;

  try {
    if (validate_cmd->parsed()) {
      const auto loaded =
          cli_detail::load_semilattice(input, validate_mode, in);
      return std::visit(
          [&](const auto& s) {
            std::optional<std::string> zero_name, id_name;
            try {
              zero_name = s.universe()->name(s.zero());
            } catch (const NoZeroElementError&) {
            }
            if (const auto id = s.identity()) {
              id_name = s.universe()->name(*id);
            }
            std::size_t c = 0;
            for (Index i = 0; i < s.size(); ++i) {
              c = std::max(c, s.downset_of(i).size());
            }
            if (json) {
              ordered_json j;
              j["report"] = "validate";
              j["input"] = loaded.label;
              j["valid"] = true;
              j["elements"] = s.size();
              j["zero"] = zero_name ? ordered_json(*zero_name) : nullptr;
              j["identity"] = id_name ? ordered_json(*id_name) : nullptr;
              j["local_finiteness_constant"] = c;
              cli_detail::emit_json(out, j);
            } else {
              out << "valid semilattice\n";
              out << "input: " << loaded.label << '\n';
              out << "elements: " << s.size() << '\n';
              out << "zero: " << (zero_name ? *zero_name : "none") << '\n';
              out << "identity: " << (id_name ? *id_name : "none") << '\n';
              out << "local_finiteness_constant: " << c << '\n';
            }
            return 0;
          },
          loaded.instance);
    }

    if (mobius_cmd->parsed()) {
      const auto loaded =
          cli_detail::load_semilattice(input, validate_mode, in);
      return std::visit(
          [&](const auto& s) {
            const Poset p = canonical_order(s);
            const MobiusTable table = mobius(p);
            if (json) {
              ordered_json j;
              j["report"] = "mobius";
              j["input"] = loaded.label;
              ordered_json entries = ordered_json::array();
              for (Index x = 0; x < p.size(); ++x) {
                const auto down = p.downset(x);
                const auto row = table.values_for(x);
                for (std::size_t i = 0; i < down.size(); ++i) {
                  ordered_json e;
                  e["lower"] = p.universe()->name(down[i]);
                  e["upper"] = p.universe()->name(x);
                  e["value"] = format_rational(row[i]);
                  entries.push_back(std::move(e));
                }
              }
              j["entries"] = std::move(entries);
              cli_detail::emit_json(out, j);
            } else {
              for (Index x = 0; x < p.size(); ++x) {
                const auto down = p.downset(x);
                const auto row = table.values_for(x);
                for (std::size_t i = 0; i < down.size(); ++i) {
                  out << p.universe()->name(down[i]) << ' '
                      << p.universe()->name(x) << ' '
                      << format_rational(row[i]) << '\n';
                }
              }
            }
            return 0;
          },
          loaded.instance);
    }

    if (schutz_cmd->parsed()) {
      const auto loaded =
          cli_detail::load_semilattice(input, validate_mode, in);
      return std::visit(
          [&](const auto& s) {
            const SchutzContext ctx(s);
            ordered_json entries = ordered_json::array();
            for (Index t = 0; t < ctx.size(); ++t) {
              const L1Vector basis = L1Vector::unit(ctx.universe(), t);
              const L1Vector img = inverse ? schutz_inverse_apply(ctx, basis)
                                           : schutz_apply(ctx, basis);
              for (const auto& [e, c] : img.coeffs()) {
                if (json) {
                  ordered_json item;
                  item["basis"] = ctx.universe()->name(t);
                  item["element"] = ctx.universe()->name(e);
                  item["value"] = format_rational(c);
                  entries.push_back(std::move(item));
                } else {
                  out << ctx.universe()->name(t) << ' '
                      << ctx.universe()->name(e) << ' ' << format_rational(c)
                      << '\n';
                }
              }
            }
            if (json) {
              ordered_json j;
              j["report"] = "schutz";
              j["input"] = loaded.label;
              j["direction"] = inverse ? "inverse" : "forward";
              j["entries"] = std::move(entries);
              cli_detail::emit_json(out, j);
            }
            return 0;
          },
          loaded.instance);
    }

    if (diagonal_cmd->parsed()) {
      const auto loaded =
          cli_detail::load_semilattice(input, validate_mode, in);
      return std::visit(
          [&](const auto& s) {
            const SchutzContext ctx(s);
            const TensorVector delta = diagonal(ctx);
            std::optional<DiagonalSolution> sol;
            if (oracle) {
              sol = diagonal_bruteforce(s, OracleOptions{oracle_bound});
            }
            const bool match = !sol || (sol->unique && sol->delta == delta);
            if (json) {
              ordered_json j;
              j["report"] = "diagonal";
              j["input"] = loaded.label;
              ordered_json entries = ordered_json::array();
              for (const auto& [key, c] : delta.coeffs()) {
                ordered_json e;
                e["left"] = ctx.universe()->name(key.first);
                e["right"] = ctx.universe()->name(key.second);
                e["value"] = format_rational(c);
                entries.push_back(std::move(e));
              }
              j["entries"] = std::move(entries);
              j["norm_delta"] = format_rational(delta.l1_norm());
              if (sol) {
                ordered_json o;
                o["unique"] = sol->unique;
                o["match"] = match;
                j["oracle"] = std::move(o);
              } else {
                j["oracle"] = nullptr;
              }
              cli_detail::emit_json(out, j);
            } else {
              write_tensor(out, delta);
              out << "norm_delta: " << format_rational(delta.l1_norm())
                  << '\n';
              if (sol) {
                out << "oracle: "
                    << (match ? (sol->unique ? "unique match"
                                             : "match, not unique")
                              : "mismatch")
                    << '\n';
              }
            }
            return match ? 0 : 1;
          },
          loaded.instance);
    }

    if (certify_cmd->parsed()) {
      const auto loaded =
          cli_detail::load_semilattice(input, validate_mode, in);
      return std::visit(
          [&](const auto& s) {
            const SchutzContext ctx(s);
            CertificateOptions opt;
            opt.threads = threads;
            opt.run_oracle = oracle;
            opt.oracle_max_dim = oracle_bound;
            opt.note = loaded.note;
            CertificateReport rep = certificate(ctx, opt);
            rep.input_label = loaded.label;
            if (json) {
              cli_detail::emit_json(out, render_json(rep));
            } else {
              out << render_text(rep);
            }
            return rep.all_pass() ? 0 : 1;
          },
          loaded.instance);
    }

    if (gen_cmd->parsed()) {
      const auto kind = parse_family_name(family);
      if (!kind) throw UnknownFamilyError("unknown family: " + family);
      if (family_n < 1) {
        throw ValidationError("family size must be at least 1");
      }
      const AnySemilattice instance = generate_family(*kind, family_n);
      std::visit(
          [&](const auto& s) {
            write_semilattice_text(out, s, family_label(*kind, family_n),
                                   family_note(*kind));
          },
          instance);
      return 0;
    }

    if (clifford_cmd->parsed()) {
      const CliffordSemigroup g =
          cli_detail::load_clifford(input, validate_mode, in);
      const CliffordReport rep = clifford_verify(g, input);
      if (json) {
        cli_detail::emit_json(out, render_json(rep));
      } else {
        out << render_text(rep);
      }
      return rep.all_pass() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace semialg
