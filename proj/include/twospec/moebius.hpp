// The Möbius transformation M_w(z) = (wz−1)/(z−w) for 0 < w < 1, and its
// continuous argument lift g: the unique continuous strictly decreasing
// function with g(0) = −1/2 and e(g(t)) = M_w(e(t)).
//
// g has the Poisson-kernel integral form
//
//     g(t) = −1/2 − ∫₀ᵗ (1−w²) / (1 − 2w·cos(2πu) + w²) du
//
// evaluated here by the closed-form antiderivative
// (1/π)·arctan(((1+w)/(1−w))·tan(πτ)) on the fundamental period
// τ ∈ (−1/2, 1/2), with branches unwound by the exact relation
// g(t+n) = g(t) − n. Branch selection is driven by continuity and
// g(0) = −1/2, never by an arctan principal value.
#pragma once

#include "twospec/cycles.hpp"

namespace twospec {

// M_w(z). Involution of the Riemann sphere mapping the unit circle to
// itself; pole at z = w.
Complex moebius(double w, Complex z);

// The argument lift g(t). Requires 0 < w < 1 (the boundary cases belong to
// the closed-form spectra, not to the lift).
double liftG(double w, double t);

// g'(t) = −(1−w²)/(1 − 2w·cos(2πt) + w²), strictly negative.
double liftGDerivative(double w, double t);

// Thin value type carrying a validated w; evaluation forwards to liftG.
class LiftFunction {
 public:
  explicit LiftFunction(double w);
  double operator()(double t) const { return liftG(w_, t); }
  double derivative(double t) const { return liftGDerivative(w_, t); }
  double w() const { return w_; }

 private:
  double w_;
};

}  // namespace twospec
