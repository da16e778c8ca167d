#include "twospec/rational.hpp"

#include <cmath>

namespace twospec {

Rational rationalize(double x, double tol, std::int64_t maxDen) {
  if (!std::isfinite(x)) throw std::domain_error("rationalize: non-finite input");
  // continued-fraction convergents p/q of x
  std::int64_t p0 = 1, q0 = 0;  // p_{-1}/q_{-1}
  std::int64_t p1 = static_cast<std::int64_t>(std::floor(x)), q1 = 1;
  double frac = x - std::floor(x);
  for (int it = 0; it < 64; ++it) {
    if (std::abs(static_cast<double>(p1) / q1 - x) <= tol) {
      return Rational(p1, q1);
    }
    if (frac == 0.0) break;
    const double inv = 1.0 / frac;
    const double a = std::floor(inv);
    if (a > static_cast<double>(INT64_MAX / 4)) break;
    const std::int64_t ai = static_cast<std::int64_t>(a);
    const std::int64_t p2 = detail::narrow128(__int128(ai) * p1 + p0, "rationalize");
    const std::int64_t q2 = detail::narrow128(__int128(ai) * q1 + q0, "rationalize");
    if (q2 > maxDen) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    frac = inv - a;
  }
  if (std::abs(static_cast<double>(p1) / q1 - x) <= tol) {
    return Rational(p1, q1);
  }
  throw std::domain_error("rationalize: no rational within tolerance");
}

}  // namespace twospec
