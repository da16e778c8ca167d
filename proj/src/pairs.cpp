#include "twospec/pairs.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace twospec {

namespace {

constexpr double kEndpointWindow = 1e-12;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

// Admissible radial values for the 0<w<1 spectral case at integer alpha:
// {cos(2π(1+2k)/(4α))}, one cosine period of k, deduplicated.
std::vector<double> admissibleW(long alphaInt) {
  std::set<double> vals;
  for (long k = 0; k < 2 * alphaInt; ++k) {
    vals.insert(std::cos(kTwoPi * (1.0 + 2.0 * k) / (4.0 * alphaInt)));
  }
  return {vals.begin(), vals.end()};
}

}  // namespace

PairVerdict classifyPair(const BoundaryParams& p, const IntervalPair& d,
                         double tol) {
  p.validate();
  d.validate();
  PairVerdict v;
  const double L = d.totalLength();

  if (p.w >= 1.0 - kEndpointWindow) {
    // every eigenfunction is supported on a single interval, so a_λ = b_λ
    // never holds
    v.conditions.push_back({"w1.never-spectral", false, 0.0});
    v.isSpectralOperator = false;
    return v;
  }

  if (p.w <= kEndpointWindow) {
    const double ratio = d.beta / L;
    const double res1 = distToInteger(ratio);
    const bool natural = res1 <= tol && std::llround(ratio) >= 1;
    v.conditions.push_back({"w0.beta-over-L-natural", natural, res1});

    const double phase = -p.psi + (p.theta - 0.5) * (1.0 - d.alpha) / L;
    const double res2 = distToInteger(phase);
    const bool phaseOk = res2 <= tol;
    v.conditions.push_back({"w0.psi-theta-integral", phaseOk, res2});

    v.isSpectralOperator = natural && phaseOk;
    if (v.isSpectralOperator) {
      v.cosetReps = {(0.5 - p.theta) / L};
      v.cosetPeriod = 1.0 / L;
      v.spectrumDescription =
          fmt(v.cosetReps[0]) + " + " + fmt(v.cosetPeriod) + "·Z";
    }
    return v;
  }

  // generic 0 < w < 1
  const double resAlpha = distToInteger(d.alpha);
  const long alphaInt = std::llround(d.alpha);
  const bool alphaOk = resAlpha <= tol && alphaInt >= 2;
  v.conditions.push_back({"mid.alpha-integer-ge-2", alphaOk, resAlpha});

  double resLen;
  if (d.lengthRatio) {
    resLen = (*d.lengthRatio == Rational(1)) ? 0.0
                                             : std::abs(d.span() - 1.0);
  } else {
    resLen = std::abs(d.span() - 1.0);
  }
  const bool lenOk = resLen <= tol;
  v.conditions.push_back({"mid.beta-equals-alpha-plus-1", lenOk, resLen});

  const double resTheta = distToInteger(p.theta - 2.0 * p.phi);
  const bool thetaOk = resTheta <= tol;
  v.conditions.push_back({"mid.theta-minus-2phi-integer", thetaOk, resTheta});

  const double resPsi =
      distToHalfInteger(p.psi + (d.alpha - 1.0) * p.phi);
  const bool psiOk = resPsi <= tol;
  v.conditions.push_back({"mid.psi-phase-half-integer", psiOk, resPsi});

  double resW = 1.0;
  for (double cand : admissibleW(std::max<long>(2, alphaInt))) {
    resW = std::min(resW, std::abs(p.w - cand));
  }
  const bool wOk = resW <= tol;
  v.conditions.push_back({"mid.w-in-cos-family", wOk, resW});

  v.isSpectralOperator = alphaOk && lenOk && thetaOk && psiOk && wOk;
  if (v.isSpectralOperator) {
    const double lamTilde = std::acos(p.w) / kTwoPi;
    v.cosetReps = {-p.phi - lamTilde, -p.phi + lamTilde};
    v.cosetPeriod = 1.0;
    v.spectrumDescription = "{" + fmt(v.cosetReps[0]) + ", " +
                            fmt(v.cosetReps[1]) + "} + Z";
  }
  return v;
}

SetVerdict spectralSetCriterion(const IntervalPair& d, double tol) {
  d.validate();
  const double ratio = d.beta / d.totalLength();
  const bool latticeCase =
      distToInteger(ratio) <= tol && std::llround(ratio) >= 1;

  bool unitLength;
  if (d.lengthRatio) {
    unitLength = *d.lengthRatio == Rational(1);
  } else {
    unitLength = std::abs(d.span() - 1.0) <= tol;
  }
  const bool adjacentCase = unitLength && distToInteger(d.alpha) <= tol &&
                            std::llround(d.alpha) >= 2;

  SetVerdict verdict;
  verdict.spectral = latticeCase || adjacentCase;
  if (latticeCase) {
    verdict.reason = "beta/(1+beta-alpha) = " + fmt(ratio) + " is an integer";
  } else if (adjacentCase) {
    verdict.reason = "alpha is an integer > 1 and beta = alpha + 1";
  } else {
    verdict.reason =
        "beta/(1+beta-alpha) = " + fmt(ratio) +
        " is not an integer and (alpha integer, beta = alpha+1) fails";
  }
  return verdict;
}

Complex CharPolynomial::eval(Complex z) const {
  Complex acc(0.0, 0.0);
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * z + static_cast<double>(coeffs[i]);
  }
  return acc;
}

Complex CharPolynomial::derivative(Complex z) const {
  Complex acc(0.0, 0.0);
  for (std::size_t i = coeffs.size(); i-- > 1;) {
    acc = acc * z + static_cast<double>(i) * static_cast<double>(coeffs[i]);
  }
  return acc;
}

CharPolynomial buildCharPolynomial(const IntervalPair& d) {
  d.validate();
  if (distToInteger(d.alpha) > 1e-9 || distToInteger(d.beta) > 1e-9) {
    throw std::domain_error("buildCharPolynomial: endpoints must be integers");
  }
  const long a = std::llround(d.alpha);
  const long b = std::llround(d.beta);
  if (a < 2 || b <= a) {
    throw std::domain_error("buildCharPolynomial: need integer 1 < alpha < beta");
  }
  // (z−1)(1 + z^α(1 + … + z^{β−α−1})) expands to z^β − z^α + z − 1
  CharPolynomial poly;
  poly.coeffs.assign(b + 1, 0);
  poly.coeffs[0] = -1;
  poly.coeffs[1] = 1;
  poly.coeffs[a] -= 1;
  poly.coeffs[b] += 1;
  return poly;
}

std::vector<Complex> polynomialRoots(const CharPolynomial& poly) {
  std::vector<double> c(poly.coeffs.begin(), poly.coeffs.end());
  while (c.size() > 1 && c.back() == 0.0) c.pop_back();
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg < 1) return {};

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -c[i] / c[deg];

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<Complex> roots(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + deg);
  for (Complex& z : roots) {
    const Complex dp = poly.derivative(z);
    if (std::abs(dp) > 1e-12) z -= poly.eval(z) / dp;
  }
  return roots;
}

std::vector<double> rootsOnUnitCircle(const CharPolynomial& poly,
                                      double circleTol) {
  std::vector<double> angles;
  for (const Complex& z : polynomialRoots(poly)) {
    if (std::abs(std::abs(z) - 1.0) < circleTol) {
      angles.push_back(wrapUnit(std::atan2(z.imag(), z.real()) / kTwoPi));
    }
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

Eigen::MatrixXcd gramMatrix(const std::vector<double>& lambdas,
                            const IntervalPair& d) {
  d.validate();
  const int n = static_cast<int>(lambdas.size());
  Eigen::MatrixXcd G(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      G(j, k) = expIntegralOverOmega(d, lambdas[j] - lambdas[k]);
    }
  }
  return G;
}

}  // namespace twospec
