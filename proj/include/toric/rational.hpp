#pragma once

// Exact scalars. Everything metric in the library (blowup sizes, edge sizes,
// vertex coordinates) is a Rational; nothing in the core touches floating point.

#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "toric/errors.hpp"

namespace toric {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Largest integer <= q.
inline Integer floor(const Rational& q) {
  const Integer n = numerator(q);
  const Integer d = denominator(q);
  Integer quotient = n / d;  // truncates toward zero
  if (n < 0 && quotient * d != n) --quotient;
  return quotient;
}

/// Smallest integer >= q.
inline Integer ceil(const Rational& q) { return -floor(-q); }

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace detail {

inline std::size_t scan_digits(std::string_view s, std::size_t pos) {
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  return pos;
}

// Decimal digits only; leading zeros are stripped.
inline Integer decimal_integer(std::string_view digits) {
  std::size_t first = 0;
  while (first + 1 < digits.size() && digits[first] == '0') ++first;
  return Integer(std::string(digits.substr(first)));
}

}  // namespace detail

/// Parses "p/q" or "p" with an optional leading minus. `offset` is added to
/// reported error positions so callers parsing a larger string get
/// positions relative to it.
inline Rational parse_rational(std::string_view s, std::size_t offset = 0) {
  std::size_t pos = 0;
  const bool negative = !s.empty() && s[0] == '-';
  if (negative) ++pos;
  const std::size_t num_end = detail::scan_digits(s, pos);
  if (num_end == pos) throw ParseError("expected digits in rational '" + std::string(s) + "'", offset + pos);
  Integer num = detail::decimal_integer(s.substr(pos, num_end - pos));
  Integer den = 1;
  pos = num_end;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    const std::size_t den_end = detail::scan_digits(s, pos);
    if (den_end == pos) throw ParseError("expected denominator in rational '" + std::string(s) + "'", offset + pos);
    den = detail::decimal_integer(s.substr(pos, den_end - pos));
    if (den == 0) throw ParseError("zero denominator in rational '" + std::string(s) + "'", offset + pos);
    pos = den_end;
  }
  if (pos != s.size()) throw ParseError("unexpected character in rational '" + std::string(s) + "'", offset + pos);
  Rational q(num, den);
  return negative ? Rational(-q) : q;
}

/// Like parse_rational, but also accepts an exact decimal such as "0.3" or
/// "-1.25" and converts it without rounding.
inline Rational parse_rational_or_decimal(std::string_view s, std::size_t offset = 0) {
  const std::size_t dot = s.find('.');
  if (dot == std::string_view::npos) return parse_rational(s, offset);
  std::size_t pos = 0;
  const bool negative = !s.empty() && s[0] == '-';
  if (negative) ++pos;
  const std::size_t int_end = detail::scan_digits(s, pos);
  if (int_end != dot) throw ParseError("malformed decimal '" + std::string(s) + "'", offset + int_end);
  const std::size_t frac_end = detail::scan_digits(s, dot + 1);
  if (frac_end != s.size()) throw ParseError("malformed decimal '" + std::string(s) + "'", offset + frac_end);
  if (int_end == pos && frac_end == dot + 1) throw ParseError("expected digits in decimal '" + std::string(s) + "'", offset + pos);
  std::string digits(s.substr(pos, int_end - pos));
  digits += s.substr(dot + 1, frac_end - dot - 1);
  Integer scale = 1;
  for (std::size_t i = dot + 1; i < frac_end; ++i) scale *= 10;
  Rational q(detail::decimal_integer(digits), scale);
  return negative ? Rational(-q) : q;
}

}  // namespace toric
