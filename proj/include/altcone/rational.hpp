#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace altcone {

/// Exact rational with arbitrary-precision numerator and denominator,
/// always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// Numerator of an integral rational as int64. Throws if q is fractional
/// or does not fit.
inline std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("rational value is not an integer");
  const BigInt& n = boost::multiprecision::numerator(q);
  if (n > std::numeric_limits<std::int64_t>::max() ||
      n < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer value does not fit in 64 bits");
  return n.convert_to<std::int64_t>();
}

/// "p/q" or "p"; integers print without a denominator.
inline std::string to_string(const Rational& q) {
  const BigInt& n = boost::multiprecision::numerator(q);
  const BigInt& d = boost::multiprecision::denominator(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

namespace detail {
inline bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}
}  // namespace detail

/// Parses "p/q" or "p" with decimal integers p, q (q != 0).
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!detail::is_decimal_integer(num))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  BigInt n(std::string(num.front() == '+' ? num.substr(1) : num));
  if (slash == std::string_view::npos) return Rational(n);
  const std::string_view den = text.substr(slash + 1);
  if (!detail::is_decimal_integer(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  BigInt d(std::string(den.front() == '+' ? den.substr(1) : den));
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

}  // namespace altcone
