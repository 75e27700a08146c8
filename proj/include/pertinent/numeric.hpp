#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "pertinent/errors.hpp"

namespace pertinent {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt b = 1;
  for (unsigned i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

inline std::string to_string(const BigInt& x) { return x.str(); }

// "3", "-3/4"
inline std::string to_string(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(const BigInt& x) { return x.convert_to<double>(); }

namespace detail {

inline BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ParseError("empty number in '" + std::string(whole) + "'");
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw ParseError("malformed number '" + std::string(whole) + "'");
  BigInt v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw ParseError("malformed number '" + std::string(whole) + "'");
    v = v * 10 + (ch - '0');
  }
  return negative ? BigInt(-v) : v;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses an exact rational literal: an integer ("2"), a fraction ("-1/2") or a
/// terminating decimal ("0.01", which is read as 1/100 exactly).
inline Rational parse_rational(std::string_view text) {
  const std::string_view s = detail::trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const BigInt num = detail::parse_integer(detail::trim(s.substr(0, slash)), text);
    const BigInt den = detail::parse_integer(detail::trim(s.substr(slash + 1)), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if (int_part.empty() && frac_part.empty()) throw ParseError("malformed number '" + std::string(text) + "'");
    const BigInt whole = int_part.empty() ? BigInt(0) : detail::parse_integer(int_part, text);
    BigInt scale = 1;
    BigInt frac = 0;
    if (!frac_part.empty()) {
      frac = detail::parse_integer(frac_part, text);
      if (frac_part.front() == '+' || frac_part.front() == '-') throw ParseError("malformed number '" + std::string(text) + "'");
      for (std::size_t k = 0; k < frac_part.size(); ++k) scale *= 10;
    }
    Rational v = Rational(whole) + Rational(frac, scale);
    return negative ? Rational(-v) : v;
  }
  return Rational(detail::parse_integer(s, text));
}

}  // namespace pertinent
