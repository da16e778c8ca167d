#include "twospec/domain.hpp"

#include <cmath>

namespace twospec {

void BoundaryParams::validate() const {
  if (!(std::isfinite(w) && std::isfinite(phi) && std::isfinite(psi) &&
        std::isfinite(theta))) {
    throw std::domain_error("BoundaryParams: non-finite parameter");
  }
  if (w < 0.0 || w > 1.0) {
    throw std::domain_error("BoundaryParams: w must lie in [0,1]");
  }
}

void IntervalPair::validate() const {
  if (!(std::isfinite(alpha) && std::isfinite(beta))) {
    throw std::domain_error("IntervalPair: non-finite endpoint");
  }
  if (alpha < 1.0) {
    throw std::domain_error("IntervalPair: alpha must be >= 1");
  }
  if (beta <= alpha) {
    throw std::domain_error("IntervalPair: beta must exceed alpha");
  }
  if (lengthRatio) {
    if (lengthRatio->num <= 0) {
      throw std::domain_error("IntervalPair: rational length must be positive");
    }
    if (std::abs(lengthRatio->value() - (beta - alpha)) > 1e-12) {
      throw std::domain_error(
          "IntervalPair: rational tag disagrees with beta - alpha");
    }
  }
}

Eigen::Matrix2cd buildBoundaryMatrix(const BoundaryParams& p) {
  p.validate();
  const double s = std::sqrt(std::max(0.0, 1.0 - p.w * p.w));
  Eigen::Matrix2cd B;
  B(0, 0) = p.w * e(p.phi);
  B(0, 1) = -s * e(p.theta - p.psi);
  B(1, 0) = s * e(p.psi);
  B(1, 1) = p.w * e(p.theta - p.phi);
  return B;
}

double unitarityDefect(const Eigen::Matrix2cd& B) {
  const Eigen::Matrix2cd d = B.adjoint() * B - Eigen::Matrix2cd::Identity();
  return d.cwiseAbs().maxCoeff();
}

Complex segmentExpIntegral(double t, double lo, double hi) {
  // ∫ e(tx) dx = (hi-lo) · e(t(lo+hi)/2) · sinc(π t (hi-lo))
  const double len = hi - lo;
  return len * e(t * 0.5 * (lo + hi)) * sinc(M_PI * t * len);
}

Complex expIntegralOverOmega(const IntervalPair& d, double t) {
  return segmentExpIntegral(t, 0.0, 1.0) +
         segmentExpIntegral(t, d.alpha, d.beta);
}

Complex innerProduct(const IntervalPair& d, const PiecewiseExp& f,
                     const PiecewiseExp& g) {
  const double t = f.lambda - g.lambda;
  return f.a * std::conj(g.a) * segmentExpIntegral(t, 0.0, 1.0) +
         f.b * std::conj(g.b) * segmentExpIntegral(t, d.alpha, d.beta);
}

}  // namespace twospec
