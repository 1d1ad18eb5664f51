#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "nckit/error.hpp"

namespace nckit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical text form: "p/q" in lowest terms with q > 0, or a bare integer.
inline std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace detail {

inline bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  // no leading zeros except "0" itself
  if (s[i] == '0' && s.size() - i > 1) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return s != "-0";
}

} // namespace detail

/// Strict inverse of to_string: rejects non-reduced fractions, q <= 0,
/// "p/1", whitespace and leading zeros.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!detail::is_integer_literal(num)) {
    throw parse_error("malformed rational '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(Integer(std::string(num)));
  const std::string_view den = text.substr(slash + 1);
  if (!detail::is_integer_literal(den) || den[0] == '-' || den == "0" || den == "1") {
    throw parse_error("malformed denominator in '" + std::string(text) + "'");
  }
  const Integer p{std::string(num)};
  const Integer q{std::string(den)};
  if (boost::multiprecision::gcd(p, q) != 1) {
    throw parse_error("rational '" + std::string(text) + "' is not in lowest terms");
  }
  return Rational(p, q);
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

} // namespace nckit
