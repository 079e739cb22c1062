// Exact rational scalars used throughout the library.
//
// All coefficient arithmetic is performed over arbitrary-precision
// rationals so that every norm comparison and inequality verdict is
// decidable exactly; no floating point appears anywhere in the core.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace semialg {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// 2^e as an exact integer (e may be large; the result is exact).
inline BigInt pow2(std::size_t e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

/// Canonical "p/q" rendering. The denominator is always printed, so
/// integer values come out as "5/1"; reports rely on this being stable.
inline std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  s += '/';
  s += denominator(r).str();
  return s;
}

/// Parses "p/q" or a bare integer "p". Returns nullopt on malformed input
/// or a zero denominator.
inline std::optional<Rational> parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)));
    }
    BigInt num{std::string(text.substr(0, slash))};
    BigInt den{std::string(text.substr(slash + 1))};
    if (den == 0) return std::nullopt;
    return Rational(num, den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace semialg
