#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>

namespace glk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline std::string rational_str(const Rational& q) { return q.str(); }

/// Parses "a" or "a/b" with optional sign. Returns nullopt on malformed input.
inline std::optional<Rational> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto ok_digits = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!ok_digits(s)) return std::nullopt;
      return Rational(BigInt(s));
    }
    std::string n = s.substr(0, slash), d = s.substr(slash + 1);
    if (!ok_digits(n) || !ok_digits(d)) return std::nullopt;
    BigInt dd(d);
    if (dd == 0) return std::nullopt;
    return Rational(BigInt(n), dd);
  } catch (...) {
    return std::nullopt;
  }
}

/// Exact square test for nonnegative integers; fills root when given.
inline bool is_perfect_square(const BigInt& n, BigInt* root = nullptr) {
  if (n < 0) return false;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

inline bool is_square_rational(const Rational& q) {
  if (q < 0) return false;
  return is_perfect_square(numerator(q)) && is_perfect_square(denominator(q));
}

}  // namespace glk
