// Angle bookkeeping in cycles: e(x) = exp(i2πx), so every phase parameter
// in this library is a plain real number with period 1.
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace twospec {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kDefaultTol = 1e-10;

// Raised when an operation is called in the wrong w-regime (e.g. the generic
// branch solver at w=0 or w=1, where the closed forms apply instead).
class WrongRegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a certified numeric procedure fails (bracket lost, residual
// above acceptance). Distinct from parameter errors for the CLI exit codes.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// e(x) = exp(i 2π x). The argument is reduced mod 1 before evaluation, so the
// result is exactly period-1 in x and keeps full precision for large |x|.
inline Complex e(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("e(x): non-finite argument");
  }
  const double r = x - std::round(x);  // r in [-1/2, 1/2]
  return std::polar(1.0, kTwoPi * r);
}

// Fractional part in [0, 1).
inline double wrapUnit(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r -= 1.0;  // guards x just below an integer
  return r;
}

// Distance from x to the nearest integer.
inline double distToInteger(double x) { return std::abs(x - std::round(x)); }

// Distance from x to the nearest half-integer multiple (the set ½Z).
inline double distToHalfInteger(double x) {
  return std::abs(x - std::round(2.0 * x) / 2.0);
}

// sin(y)/y, stable through y = 0.
inline double sinc(double y) {
  if (std::abs(y) < 1e-8) return 1.0 - y * y / 6.0;
  return std::sin(y) / y;
}

}  // namespace twospec
