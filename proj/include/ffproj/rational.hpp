#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "ffproj/errors.hpp"

namespace ffproj {

// Exact rational, used for exponents and thresholds that must never go
// through floating point.  Normalized: den > 0, gcd(|num|, den) == 1.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den == 0) throw RangeError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  // Accepts "a" or "a/b".
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(s));
      return Rational(std::stoll(s.substr(0, slash)),
                      std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw ParseError("bad rational '" + s + "'");
    }
  }

  std::string str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }

  double to_double() const { return double(num) / double(den); }

  bool operator==(const Rational& o) const {
    return num == o.num && den == o.den;
  }
  bool operator<(const Rational& o) const {
    return (__int128)num * o.den < (__int128)o.num * den;
  }
  bool operator<=(const Rational& o) const {
    return (__int128)num * o.den <= (__int128)o.num * den;
  }
};

}  // namespace ffproj
