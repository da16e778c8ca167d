#include "twospec/moebius.hpp"

#include <cmath>

namespace twospec {

Complex moebius(double w, Complex z) {
  if (!(w > 0.0 && w < 1.0)) {
    throw std::domain_error("moebius: w must lie in (0,1)");
  }
  if (std::abs(z - Complex(w, 0.0)) < 1e-300) {
    throw std::domain_error("moebius: pole at z = w");
  }
  return (w * z - 1.0) / (z - w);
}

double liftG(double w, double t) {
  if (!(w > 0.0 && w < 1.0)) {
    throw std::domain_error("liftG: w must lie in (0,1)");
  }
  if (!std::isfinite(t)) {
    throw std::domain_error("liftG: non-finite argument");
  }
  const double m = std::round(t);
  const double tau = t - m;  // in [-1/2, 1/2]
  double base;
  if (std::abs(std::abs(tau) - 0.5) < 1e-15) {
    // tan(π/2) is singular; g(±1/2) are known exactly: g(1/2) = -1, g(-1/2) = 0
    base = tau > 0.0 ? -1.0 : 0.0;
  } else {
    const double k = (1.0 + w) / (1.0 - w);
    base = -0.5 - std::atan(k * std::tan(M_PI * tau)) / M_PI;
  }
  return base - m;
}

double liftGDerivative(double w, double t) {
  if (!(w > 0.0 && w < 1.0)) {
    throw std::domain_error("liftGDerivative: w must lie in (0,1)");
  }
  const double den = 1.0 - 2.0 * w * std::cos(kTwoPi * (t - std::round(t))) + w * w;
  return -(1.0 - w * w) / den;
}

LiftFunction::LiftFunction(double w) : w_(w) {
  if (!(w > 0.0 && w < 1.0)) {
    throw std::domain_error("LiftFunction: w must lie in (0,1)");
  }
}

}  // namespace twospec
