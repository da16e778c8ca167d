#include "twospec/evolution.hpp"

#include <cmath>

namespace twospec {

namespace {

constexpr double kEndpointWindow = 1e-12;

bool sameGrid(const WaveGrid& f, const WaveGrid& g) {
  return std::abs(f.domain.alpha - g.domain.alpha) < 1e-12 &&
         std::abs(f.domain.beta - g.domain.beta) < 1e-12 &&
         f.onI1.size() == g.onI1.size() && f.onI2.size() == g.onI2.size();
}

// trapezoid weight for node k of n+1 nodes
double trapWeight(int k, int n, double dx) {
  return (k == 0 || k == n) ? 0.5 * dx : dx;
}

}  // namespace

EigenBasis makeEigenBasis(const SpectrumSlice& slice, const BoundaryParams& p,
                          const IntervalPair& d) {
  EigenBasis basis;
  basis.params = p;
  basis.domain = d;
  const double r = d.span();
  auto push = [&](double lambda, Complex a, Complex b) {
    basis.lambda.push_back(lambda);
    basis.a.push_back(a);
    basis.b.push_back(b);
    basis.normSq.push_back(std::norm(a) + std::norm(b) * r);
  };
  for (const auto& entry : slice.entries) {
    push(entry.lambda, entry.coeffA, entry.coeffB);
    if (entry.multiplicity == 2) {
      if (std::abs(entry.coeffA2) + std::abs(entry.coeffB2) == 0.0) {
        throw std::domain_error(
            "expand: multiplicity-2 eigenvalue without both basis vectors");
      }
      push(entry.lambda, entry.coeffA2, entry.coeffB2);
    }
  }
  return basis;
}

EigenBasis makeEigenBasis(const BoundaryParams& p, const IntervalPair& d,
                          long nLo, long nHi) {
  p.validate();
  d.validate();
  if (nHi < nLo) throw std::domain_error("makeEigenBasis: empty index range");

  if (p.w <= kEndpointWindow) {
    const double L = d.totalLength();
    const double base = (0.5 - p.theta) / L;
    const double step = 1.0 / L;
    return makeEigenBasis(closedFormW0(p, d, base + nLo * step - 0.25 * step,
                                       base + nHi * step + 0.25 * step),
                          p, d);
  }
  if (p.w >= 1.0 - kEndpointWindow) {
    // anchor the λ-window on the χ_I1 lattice; both families inside it enter
    const double lo = -p.phi + static_cast<double>(nLo) - 1e-9;
    const double hi = -p.phi + static_cast<double>(nHi) + 1e-9;
    return makeEigenBasis(closedFormW1(p, d, lo, hi), p, d);
  }

  EigenBasis basis;
  basis.params = p;
  basis.domain = d;
  const double r = d.span();
  for (const auto& entry : solveBranchRange(p, d, nLo, nHi)) {
    basis.lambda.push_back(entry.lambda);
    basis.a.push_back(entry.coeffA);
    basis.b.push_back(entry.coeffB);
    basis.normSq.push_back(std::norm(entry.coeffA) +
                           std::norm(entry.coeffB) * r);
  }
  return basis;
}

WaveGrid makeGrid(const IntervalPair& d, int perUnit) {
  d.validate();
  if (perUnit < 2) throw std::domain_error("makeGrid: perUnit must be >= 2");
  WaveGrid grid;
  grid.domain = d;
  grid.perUnit = perUnit;
  grid.onI1 = Eigen::VectorXcd::Zero(perUnit + 1);
  const int n2 = static_cast<int>(std::ceil((d.beta - d.alpha) * perUnit));
  grid.onI2 = Eigen::VectorXcd::Zero(n2 + 1);
  return grid;
}

double bumpValue(double x, double center, double radius) {
  const double u = (x - center) / radius;
  if (std::abs(u) >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - u * u));
}

WaveGrid bumpState(const IntervalPair& d, double center, double radius,
                   int perUnit) {
  if (radius <= 0.0) throw std::domain_error("bumpState: radius must be > 0");
  WaveGrid grid = makeGrid(d, perUnit);
  for (int k = 0; k < grid.onI1.size(); ++k) {
    grid.onI1[k] = bumpValue(grid.x1(k), center, radius);
  }
  for (int k = 0; k < grid.onI2.size(); ++k) {
    grid.onI2[k] = bumpValue(grid.x2(k), center, radius);
  }
  return grid;
}

Complex innerProduct(const WaveGrid& f, const WaveGrid& g) {
  if (!sameGrid(f, g)) {
    throw std::domain_error("innerProduct: mismatched grid domains");
  }
  Complex acc(0.0, 0.0);
  const int n1 = static_cast<int>(f.onI1.size()) - 1;
  for (int k = 0; k <= n1; ++k) {
    acc += trapWeight(k, n1, f.dx1()) * f.onI1[k] * std::conj(g.onI1[k]);
  }
  const int n2 = static_cast<int>(f.onI2.size()) - 1;
  for (int k = 0; k <= n2; ++k) {
    acc += trapWeight(k, n2, f.dx2()) * f.onI2[k] * std::conj(g.onI2[k]);
  }
  return acc;
}

double gridNorm(const WaveGrid& f) {
  return std::sqrt(std::abs(innerProduct(f, f)));
}

double WaveCoefficients::norm() const {
  double acc = 0.0;
  for (int i = 0; i < c.size(); ++i) {
    acc += std::norm(c[i]) * basis->normSq[i];
  }
  return std::sqrt(acc);
}

WaveCoefficients expand(const WaveGrid& f,
                        std::shared_ptr<const EigenBasis> basis) {
  if (std::abs(f.domain.alpha - basis->domain.alpha) > 1e-12 ||
      std::abs(f.domain.beta - basis->domain.beta) > 1e-12) {
    throw std::domain_error("expand: grid and basis domains differ");
  }
  WaveCoefficients state;
  state.basis = basis;
  state.c = Eigen::VectorXcd::Zero(basis->size());

  const int n1 = static_cast<int>(f.onI1.size()) - 1;
  const int n2 = static_cast<int>(f.onI2.size()) - 1;
  for (int i = 0; i < basis->size(); ++i) {
    Complex acc(0.0, 0.0);
    // ⟨f, u_i⟩ with u_i = (a χ_I1 + b χ_I2) e_λ
    for (int k = 0; k <= n1; ++k) {
      acc += trapWeight(k, n1, f.dx1()) * f.onI1[k] *
             std::conj(basis->a[i] * e(basis->lambda[i] * f.x1(k)));
    }
    for (int k = 0; k <= n2; ++k) {
      acc += trapWeight(k, n2, f.dx2()) * f.onI2[k] *
             std::conj(basis->b[i] * e(basis->lambda[i] * f.x2(k)));
    }
    state.c[i] = acc / basis->normSq[i];
  }

  const WaveGrid recon = synthesize(state, f.perUnit);
  WaveGrid diff = recon;
  diff.onI1 -= f.onI1;
  diff.onI2 -= f.onI2;
  state.truncationResidual = gridNorm(diff);
  return state;
}

WaveCoefficients expand(const WaveGrid& f, const BoundaryParams& p,
                        const IntervalPair& d, long nLo, long nHi) {
  return expand(f, std::make_shared<EigenBasis>(makeEigenBasis(p, d, nLo, nHi)));
}

WaveCoefficients expandExact(const PiecewiseExp& f,
                             std::shared_ptr<const EigenBasis> basis) {
  WaveCoefficients state;
  state.basis = basis;
  state.c = Eigen::VectorXcd::Zero(basis->size());
  const IntervalPair& d = basis->domain;
  for (int i = 0; i < basis->size(); ++i) {
    const PiecewiseExp u{basis->a[i], basis->b[i], basis->lambda[i]};
    state.c[i] = innerProduct(d, f, u) / basis->normSq[i];
  }
  // Parseval defect: ‖f‖² − Σ |c|²‖u‖², clamped against roundoff
  double captured = 0.0;
  for (int i = 0; i < basis->size(); ++i) {
    captured += std::norm(state.c[i]) * basis->normSq[i];
  }
  const double total = innerProduct(d, f, f).real();
  state.truncationResidual = std::sqrt(std::max(0.0, total - captured));
  return state;
}

WaveCoefficients evolve(const WaveCoefficients& state, double t) {
  WaveCoefficients out = state;
  for (int i = 0; i < out.c.size(); ++i) {
    out.c[i] *= e(-state.basis->lambda[i] * t);
  }
  return out;
}

WaveGrid synthesize(const WaveCoefficients& state, int perUnit) {
  const EigenBasis& basis = *state.basis;
  WaveGrid grid = makeGrid(basis.domain, perUnit);
  for (int i = 0; i < basis.size(); ++i) {
    const Complex ci = state.c[i];
    if (ci == Complex(0.0, 0.0)) continue;
    for (int k = 0; k < grid.onI1.size(); ++k) {
      grid.onI1[k] += ci * basis.a[i] * e(basis.lambda[i] * grid.x1(k));
    }
    for (int k = 0; k < grid.onI2.size(); ++k) {
      grid.onI2[k] += ci * basis.b[i] * e(basis.lambda[i] * grid.x2(k));
    }
  }
  return grid;
}

double boundaryResidual(const WaveCoefficients& state) {
  const EigenBasis& basis = *state.basis;
  Complex f1(0, 0), fBeta(0, 0), f0(0, 0), fAlpha(0, 0);
  for (int i = 0; i < basis.size(); ++i) {
    const Complex ci = state.c[i];
    f1 += ci * basis.a[i] * e(basis.lambda[i]);
    fBeta += ci * basis.b[i] * e(basis.lambda[i] * basis.domain.beta);
    f0 += ci * basis.a[i];
    fAlpha += ci * basis.b[i] * e(basis.lambda[i] * basis.domain.alpha);
  }
  const Eigen::Matrix2cd B = buildBoundaryMatrix(basis.params);
  Eigen::Vector2cd right(f1, fBeta), left(f0, fAlpha);
  return (B * right - left).norm();
}

double checkBoundaryInvariance(const WaveCoefficients& state,
                               const std::vector<double>& times) {
  double worst = 0.0;
  for (double t : times) {
    worst = std::max(worst, boundaryResidual(evolve(state, t)));
  }
  return worst;
}

TranslationReport checkTranslation(const BoundaryParams& p,
                                   const IntervalPair& d, double t,
                                   double bumpCenter, double bumpRadius,
                                   long truncation, int perUnit) {
  p.validate();
  d.validate();
  if (t < 0.0) throw std::domain_error("checkTranslation: t must be >= 0");
  const double lo = bumpCenter - bumpRadius;
  const double hi = bumpCenter + bumpRadius;
  if (!(lo > t && hi < 1.0 - t)) {
    throw std::domain_error(
        "checkTranslation: bump support must stay further than t from the "
        "endpoints of I1");
  }

  const WaveGrid f = bumpState(d, bumpCenter, bumpRadius, perUnit);
  const WaveCoefficients coeffs = expand(f, p, d, -truncation, truncation);
  const WaveGrid at0 = synthesize(coeffs, perUnit);
  const WaveGrid moved = synthesize(evolve(coeffs, t), perUnit);

  // Truncation error of the expansion concentrates at the interval
  // endpoints; the translation statement is interior, so a small margin
  // around each endpoint is excluded from the deviation measurement.
  constexpr double kMargin = 0.02;
  TranslationReport report;
  report.truncationResidual = coeffs.truncationResidual;
  for (int k = 0; k < moved.onI1.size(); ++k) {
    const double x = moved.x1(k);
    if (x < kMargin || x > 1.0 - kMargin) continue;
    report.truncationDeviation =
        std::max(report.truncationDeviation, std::abs(at0.onI1[k] - f.onI1[k]));
    const double want = bumpValue(x - t, bumpCenter, bumpRadius);
    report.maxDeviation =
        std::max(report.maxDeviation, std::abs(moved.onI1[k] - want));
  }
  for (int k = 0; k < moved.onI2.size(); ++k) {
    const double x = moved.x2(k);
    if (x < d.alpha + kMargin || x > d.beta - kMargin) continue;
    report.truncationDeviation =
        std::max(report.truncationDeviation, std::abs(at0.onI2[k]));
    report.maxDeviation = std::max(report.maxDeviation, std::abs(moved.onI2[k]));
  }
  return report;
}

TransitionReport checkTransitionProbabilities(const BoundaryParams& p,
                                              const IntervalPair& d,
                                              double eps, double t,
                                              long truncation, int perUnit) {
  p.validate();
  d.validate();
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::domain_error("checkTransitionProbabilities: need 0 < eps < 1");
  }
  if (!(t > eps)) {
    throw std::domain_error(
        "checkTransitionProbabilities: need t > eps so the support crosses "
        "x = 1");
  }
  // measurement windows [0, t] and [α, α+t] must be disjoint and inside Ω
  if (t > d.alpha || t > 1.0 || t > d.beta - d.alpha) {
    throw std::domain_error(
        "checkTransitionProbabilities: measurement windows overlap the "
        "domain structure");
  }

  const double center = 1.0 - 0.5 * eps;
  const double radius = 0.5 * eps;
  const WaveGrid f0 = bumpState(d, center, radius, perUnit);
  const WaveCoefficients coeffs = expand(f0, p, d, -truncation, truncation);
  const WaveGrid ft = synthesize(evolve(coeffs, t), perUnit);

  TransitionReport report;
  report.initialMass = std::abs(innerProduct(f0, f0));

  Complex overlap0(0.0, 0.0), overlapA(0.0, 0.0);
  const int n1 = static_cast<int>(ft.onI1.size()) - 1;
  for (int k = 0; k <= n1; ++k) {
    const double x = ft.x1(k);
    if (x > t) break;
    const double wgt = trapWeight(k, n1, ft.dx1());
    report.massAt0 += wgt * std::norm(ft.onI1[k]);
    // against the rigid shift f0(x − (t−1)): re-entry through x = 1 → 0
    overlap0 += wgt * ft.onI1[k] * bumpValue(x - (t - 1.0), center, radius);
  }
  const int n2 = static_cast<int>(ft.onI2.size()) - 1;
  for (int k = 0; k <= n2; ++k) {
    const double x = ft.x2(k);
    if (x > d.alpha + t) break;
    const double wgt = trapWeight(k, n2, ft.dx2());
    report.massAtAlpha += wgt * std::norm(ft.onI2[k]);
    overlapA += wgt * ft.onI2[k] *
                bumpValue(x - (d.alpha + t - 1.0), center, radius);
  }
  if (std::abs(overlap0) > 1e-12 * report.initialMass) {
    report.phase0 = overlap0 / std::abs(overlap0);
  }
  if (std::abs(overlapA) > 1e-12 * report.initialMass) {
    report.phaseAlpha = overlapA / std::abs(overlapA);
  }
  return report;
}

}  // namespace twospec
