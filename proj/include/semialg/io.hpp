// Text input format. A semilattice file looks like
//
//     # optional comments anywhere ('#' to end of line)
//     semilattice
//     symmetric            # optional: product lines cover both orders
//     elements theta a b   # may repeat; must precede the products
//     product a b theta    # product <x> <y> <x*y>
//
// In default mode every ordered pair must be listed exactly once. With
// `symmetric`, each unordered pair appears once in either order and the
// diagonal may be omitted (idempotency fills it in).
//
// A Clifford file uses the header `clifford`, the same product section
// for the idempotent semilattice, and two extra directives:
//
//     group a cyclic:2             # trivial | cyclic:<k> | symmetric:<k>
//     phi a theta : g1->e          # images of G(upper) in G(lower), by
//                                  # local names, for a cover pair
//
// Elements without a group line carry the trivial group. A phi line must
// give an image for every non-identity element of the upper group; the
// identity maps to the identity implicitly.

#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "clifford.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "semilattice.hpp"

namespace semialg {

namespace io_detail {

struct TokenLine {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

inline std::vector<TokenLine> tokenize(std::istream& in) {
  std::vector<TokenLine> out;
  std::string line;
  std::size_t num = 0;
  while (std::getline(in, line)) {
    ++num;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    TokenLine tl;
    tl.number = num;
    std::string tok;
    while (ss >> tok) tl.tokens.push_back(std::move(tok));
    if (!tl.tokens.empty()) out.push_back(std::move(tl));
  }
  return out;
}

struct TableSection {
  std::vector<std::string> names;
  std::vector<std::optional<Index>> table;
  bool symmetric = false;
  std::vector<TokenLine> deferred;  // group/phi lines, when allowed
};

inline TableSection parse_table_section(const std::vector<TokenLine>& lines,
                                        const std::string& header,
                                        bool allow_clifford_directives) {
  if (lines.empty() || lines.front().tokens != std::vector<std::string>{header}) {
    throw ParseError(lines.empty() ? 1 : lines.front().number,
                     "expected '" + header + "' header");
  }
  TableSection sec;
  std::unordered_map<std::string, Index> index;
  bool products_started = false;
  const auto resolve = [&](const std::string& name, std::size_t line) {
    const auto it = index.find(name);
    if (it == index.end()) {
      throw ParseError(line, "unknown element: " + name);
    }
    return it->second;
  };
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& [number, tokens] = lines[li];
    const std::string& head = tokens.front();
    if (head == "elements") {
      if (products_started) {
        throw ParseError(number, "elements must be declared before products");
      }
      if (tokens.size() < 2) {
        throw ParseError(number, "elements line names no elements");
      }
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const Index id = static_cast<Index>(sec.names.size());
        if (!index.emplace(tokens[i], id).second) {
          throw ParseError(number, "duplicate element name: " + tokens[i]);
        }
        sec.names.push_back(tokens[i]);
      }
    } else if (head == "symmetric") {
      if (tokens.size() != 1) {
        throw ParseError(number, "symmetric takes no arguments");
      }
      if (products_started) {
        throw ParseError(number, "symmetric must precede the products");
      }
      sec.symmetric = true;
    } else if (head == "product") {
      if (tokens.size() != 4) {
        throw ParseError(number, "product lines read: product <x> <y> <x*y>");
      }
      if (!products_started) {
        products_started = true;
        if (sec.names.empty()) {
          throw ParseError(number, "no elements declared");
        }
        sec.table.assign(sec.names.size() * sec.names.size(), std::nullopt);
      }
      const Index n = static_cast<Index>(sec.names.size());
      const Index x = resolve(tokens[1], number);
      const Index y = resolve(tokens[2], number);
      const Index v = resolve(tokens[3], number);
      auto& slot = sec.table[static_cast<std::size_t>(x) * n + y];
      if (slot) {
        throw ParseError(number, "product of " + tokens[1] + " and " +
                                     tokens[2] + " already specified");
      }
      slot = v;
      if (sec.symmetric && x != y) {
        auto& mirror = sec.table[static_cast<std::size_t>(y) * n + x];
        if (mirror) {
          throw ParseError(number, "product of " + tokens[1] + " and " +
                                       tokens[2] + " already specified");
        }
        mirror = v;
      }
    } else if (allow_clifford_directives &&
               (head == "group" || head == "phi")) {
      sec.deferred.push_back(lines[li]);
    } else {
      throw ParseError(number, "unknown directive '" + head + "'");
    }
  }
  if (sec.names.empty()) throw ValidationError("no elements declared");
  const Index n = static_cast<Index>(sec.names.size());
  if (sec.table.empty()) {
    sec.table.assign(static_cast<std::size_t>(n) * n, std::nullopt);
  }
  if (sec.symmetric) {
    for (Index x = 0; x < n; ++x) {
      auto& slot = sec.table[static_cast<std::size_t>(x) * n + x];
      if (!slot) slot = x;
    }
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (!sec.table[static_cast<std::size_t>(x) * n + y]) {
        throw ValidationError("product table incomplete: missing product " +
                              sec.names[x] + " " + sec.names[y]);
      }
    }
  }
  return sec;
}

inline FiniteGroup parse_group_spec(const std::string& spec,
                                    std::size_t line) {
  if (spec == "trivial") return FiniteGroup::trivial();
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    Index k = 0;
    try {
      k = static_cast<Index>(std::stoul(spec.substr(colon + 1)));
    } catch (const std::exception&) {
      throw ParseError(line, "bad group order in '" + spec + "'");
    }
    try {
      if (kind == "cyclic") return FiniteGroup::cyclic(k);
      if (kind == "symmetric") return FiniteGroup::symmetric(k);
    } catch (const ValidationError& e) {
      throw ParseError(line, e.what());
    }
  }
  throw ParseError(line, "unknown group spec '" + spec +
                             "' (trivial | cyclic:<k> | symmetric:<k>)");
}

}  // namespace io_detail

inline TableSemilattice parse_semilattice_text(std::istream& in,
                                               Validate validate) {
  const auto lines = io_detail::tokenize(in);
  auto sec = io_detail::parse_table_section(lines, "semilattice", false);
  std::vector<Index> table;
  table.reserve(sec.table.size());
  for (const auto& v : sec.table) table.push_back(*v);
  return semilattice_from_table(std::move(sec.names), std::move(table),
                                validate);
}

inline CliffordSemigroup parse_clifford_text(std::istream& in,
                                             Validate validate) {
  const auto lines = io_detail::tokenize(in);
  auto sec = io_detail::parse_table_section(lines, "clifford", true);
  std::vector<Index> table;
  table.reserve(sec.table.size());
  for (const auto& v : sec.table) table.push_back(*v);
  CliffordData data{semilattice_from_table(sec.names, std::move(table),
                                           validate),
                    {}, {}};
  const Index m = data.lattice.size();
  data.groups.assign(m, FiniteGroup::trivial());
  const auto& uni = *data.lattice.universe();
  std::vector<char> group_seen(m, 0);
  for (const auto& [number, tokens] : sec.deferred) {
    if (tokens.front() != "group") continue;
    if (tokens.size() != 3) {
      throw ParseError(number, "group lines read: group <element> <spec>");
    }
    const auto id = uni.find(tokens[1]);
    if (!id) throw ParseError(number, "unknown element: " + tokens[1]);
    if (group_seen[*id]) {
      throw ParseError(number, "group for " + tokens[1] +
                                   " already specified");
    }
    group_seen[*id] = 1;
    data.groups[*id] = io_detail::parse_group_spec(tokens[2], number);
  }
  for (const auto& [number, tokens] : sec.deferred) {
    if (tokens.front() != "phi") continue;
    if (tokens.size() < 5 || tokens[3] != ":") {
      throw ParseError(
          number, "phi lines read: phi <upper> <lower> : <g>-><h> ...");
    }
    const auto upper = uni.find(tokens[1]);
    const auto lower = uni.find(tokens[2]);
    if (!upper) throw ParseError(number, "unknown element: " + tokens[1]);
    if (!lower) throw ParseError(number, "unknown element: " + tokens[2]);
    if (data.cover_phi.count({*upper, *lower})) {
      throw ParseError(number, "structure map for " + tokens[1] + " -> " +
                                   tokens[2] + " already specified");
    }
    const FiniteGroup& gu = data.groups[*upper];
    const FiniteGroup& gl = data.groups[*lower];
    std::vector<std::optional<Index>> image(gu.size());
    image[gu.identity()] = gl.identity();
    for (std::size_t i = 4; i < tokens.size(); ++i) {
      const auto arrow = tokens[i].find("->");
      if (arrow == std::string::npos) {
        throw ParseError(number, "expected <g>-><h>, got '" + tokens[i] + "'");
      }
      Index from = 0, to = 0;
      try {
        from = gu.require_local(tokens[i].substr(0, arrow));
        to = gl.require_local(tokens[i].substr(arrow + 2));
      } catch (const UnknownElementError& e) {
        throw ParseError(number, e.what());
      }
      if (from == gu.identity() && to != gl.identity()) {
        throw ParseError(number, "the identity must map to the identity");
      }
      image[from] = to;
    }
    std::vector<Index> resolved(gu.size());
    for (Index a = 0; a < gu.size(); ++a) {
      if (!image[a]) {
        throw ParseError(number, "missing image for " + gu.local_name(a));
      }
      resolved[a] = *image[a];
    }
    data.cover_phi.emplace(std::make_pair(*upper, *lower),
                           std::move(resolved));
  }
  return CliffordSemigroup(std::move(data));
}

/// Canonical file for an instance: symmetric mode, diagonal omitted,
/// products listed for ascending index pairs.
template <Semilattice S>
void write_semilattice_text(std::ostream& out, const S& s,
                            const std::string& label,
                            const std::optional<std::string>& note) {
  out << "# " << label << '\n';
  if (note) out << "# note: " << *note << '\n';
  out << "semilattice\n";
  out << "symmetric\n";
  const Index n = s.size();
  const auto& uni = *s.universe();
  for (Index i = 0; i < n; i += 12) {
    out << "elements";
    for (Index j = i; j < n && j < i + 12; ++j) out << ' ' << uni.name(j);
    out << '\n';
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      out << "product " << uni.name(i) << ' ' << uni.name(j) << ' '
          << uni.name(s.product(i, j)) << '\n';
    }
  }
}

}  // namespace semialg
