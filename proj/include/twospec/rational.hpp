// Exact rational arithmetic on 64-bit integers, used for length tags and the
// tiling sweep. Intermediate products go through __int128 and overflow is an
// error rather than a wrap.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace twospec {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

namespace detail {
inline std::int64_t narrow128(__int128 v, const char* what) {
  if (v > __int128(INT64_MAX) || v < __int128(INT64_MIN)) {
    throw std::overflow_error(std::string("Rational overflow in ") + what);
  }
  return static_cast<std::int64_t>(v);
}
}  // namespace detail

inline Rational operator+(const Rational& a, const Rational& b) {
  __int128 n = __int128(a.num) * b.den + __int128(b.num) * a.den;
  __int128 d = __int128(a.den) * b.den;
  return Rational(detail::narrow128(n, "+"), detail::narrow128(d, "+"));
}

inline Rational operator-(const Rational& a, const Rational& b) {
  __int128 n = __int128(a.num) * b.den - __int128(b.num) * a.den;
  __int128 d = __int128(a.den) * b.den;
  return Rational(detail::narrow128(n, "-"), detail::narrow128(d, "-"));
}

inline Rational operator*(const Rational& a, const Rational& b) {
  __int128 n = __int128(a.num) * b.num;
  __int128 d = __int128(a.den) * b.den;
  return Rational(detail::narrow128(n, "*"), detail::narrow128(d, "*"));
}

inline bool operator==(const Rational& a, const Rational& b) {
  return a.num == b.num && a.den == b.den;
}
inline bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
inline bool operator<(const Rational& a, const Rational& b) {
  return __int128(a.num) * b.den < __int128(b.num) * a.den;
}
inline bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

// floor(a / b) as an integer, b > 0.
inline std::int64_t floorDiv(const Rational& a, const Rational& b) {
  if (b.num <= 0) throw std::domain_error("floorDiv: divisor must be positive");
  __int128 n = __int128(a.num) * b.den;
  __int128 d = __int128(a.den) * b.num;
  __int128 q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return detail::narrow128(q, "floorDiv");
}

inline std::int64_t ceilDiv(const Rational& a, const Rational& b) {
  return -floorDiv(Rational(-a.num, a.den), b);
}

// Nearest rational with denominator <= maxDen within tol of x (continued
// fractions). The default tol sits just above double roundoff so that good
// irrational approximants (e.g. convergents of sqrt(2)) are still rejected.
// Throws if no admissible rational exists.
Rational rationalize(double x, double tol = 1e-13, std::int64_t maxDen = 1000000);

}  // namespace twospec
