#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace simpol {

// Exact arithmetic everywhere; floating point is banned from the core.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

// Accepts "num/den" or a bare integer, with optional leading '-'.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool seen_digit = false, seen_slash = false;
  for (std::size_t i = start; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/' && seen_digit && !seen_slash && i + 1 < text.size()) {
      seen_slash = true;
      seen_digit = false;
    } else if (c >= '0' && c <= '9') {
      seen_digit = true;
    } else {
      throw std::invalid_argument("bad rational literal: " + text);
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad rational literal: " + text);
  Rational value(text);
  if (denominator(value) == 0) throw std::invalid_argument("zero denominator: " + text);
  return value;
}

// "num/den", or just "num" when the denominator is 1.
inline std::string format_rational(const Rational& value) { return value.str(); }

}  // namespace simpol
