#include "twospec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "twospec/moebius.hpp"

namespace twospec {

namespace {

constexpr double kEndpointWindow = 1e-12;  // w this close to 0/1 uses closed forms
constexpr double kBranchResidualTol = 1e-12;   // |h(λ_n) - n|
constexpr double kMasterResidualTol = 1e-9;    // |F(λ_n)|; conditioning worsens as w→1

bool genericRegime(double w) {
  return w > kEndpointWindow && w < 1.0 - kEndpointWindow;
}

void requireGeneric(const BoundaryParams& p, const char* who) {
  if (!genericRegime(p.w)) {
    throw WrongRegimeError(std::string(who) +
                           ": w is at an endpoint; use closedFormW0/closedFormW1");
  }
}

// Eigenfunction coefficient for 0 < w < 1, normalized to b = 1:
//     a = √(1−w²)·e(θ−ψ+βλ) / (w·e(φ+λ) − 1).
Complex genericCoeffA(const BoundaryParams& p, const IntervalPair& d,
                      double lambda) {
  const double s = std::sqrt(1.0 - p.w * p.w);
  return s * e(p.theta - p.psi + d.beta * lambda) /
         (p.w * e(p.phi + lambda) - 1.0);
}

// Lattice indices n with base + n*step inside [lo, hi] (small outward nudge
// so exact window endpoints are kept).
std::pair<long, long> latticeIndexRange(double base, double step, double lo,
                                        double hi) {
  const double nudge = 1e-12 * (1.0 + std::max(std::abs(lo), std::abs(hi)));
  const long nLo = static_cast<long>(std::ceil((lo - nudge - base) / step));
  const long nHi = static_cast<long>(std::floor((hi + nudge - base) / step));
  return {nLo, nHi};
}

}  // namespace

Complex masterResidual(const BoundaryParams& p, const IntervalPair& d,
                       double lambda) {
  p.validate();
  d.validate();
  const double r = d.span();
  return (e(p.phi + lambda) - p.w) * e(p.theta - p.phi + r * lambda) -
         (p.w * e(p.phi + lambda) - 1.0);
}

double hFunction(const BoundaryParams& p, const IntervalPair& d, double t) {
  requireGeneric(p, "hFunction");
  return p.theta - p.phi + d.span() * t - liftG(p.w, p.phi + t);
}

double hDerivative(const BoundaryParams& p, const IntervalPair& d, double t) {
  requireGeneric(p, "hDerivative");
  return d.span() - liftGDerivative(p.w, p.phi + t);
}

EigenvalueEntry solveBranch(const BoundaryParams& p, const IntervalPair& d,
                            long n) {
  p.validate();
  d.validate();
  requireGeneric(p, "solveBranch");

  const double r = d.span();
  const double target = static_cast<double>(n);
  const double h0 = hFunction(p, d, 0.0);
  // h' lies in [slopeMin, slopeMax], so the root has a certified bracket.
  const double slopeMin = r + (1.0 - p.w) / (1.0 + p.w);
  const double slopeMax = r + (1.0 + p.w) / (1.0 - p.w);
  const double diff = target - h0;
  double lo = diff >= 0.0 ? diff / slopeMax : diff / slopeMin;
  double hi = diff >= 0.0 ? diff / slopeMin : diff / slopeMax;
  const double pad = 1e-9 * (1.0 + std::max(std::abs(lo), std::abs(hi)));
  lo -= pad;
  hi += pad;

  double flo = hFunction(p, d, lo) - target;
  double fhi = hFunction(p, d, hi) - target;
  for (int grow = 0; grow < 64 && (flo > 0.0 || fhi < 0.0); ++grow) {
    const double width = hi - lo + 1e-6;
    if (flo > 0.0) {
      lo -= width;
      flo = hFunction(p, d, lo) - target;
    }
    if (fhi < 0.0) {
      hi += width;
      fhi = hFunction(p, d, hi) - target;
    }
  }
  if (flo > 0.0 || fhi < 0.0) {
    throw SolverError("solveBranch: bracket not found");
  }

  for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + std::abs(lo) + std::abs(hi));
       ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = hFunction(p, d, mid) - target;
    if (fm < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  double lambda = 0.5 * (lo + hi);
  double f = hFunction(p, d, lambda) - target;
  for (int it = 0; it < 3; ++it) {
    const double step = f / hDerivative(p, d, lambda);
    const double next = lambda - step;
    if (next < lo || next > hi) break;
    const double fn = hFunction(p, d, next) - target;
    if (std::abs(fn) >= std::abs(f)) break;
    lambda = next;
    f = fn;
  }

  // λ is pinned to a few ulps by the bisection bracket; the attainable
  // h-residual floor is slope·ulp(λ), which dominates 1e-12 when w → 1 and
  // the lift spikes. The master residual below stays the sharp gate.
  const double slope = hDerivative(p, d, lambda);
  const double hTol =
      kBranchResidualTol +
      8.0 * slope * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(lambda));
  if (std::abs(f) > hTol) {
    throw SolverError("solveBranch: branch equation residual above tolerance");
  }
  EigenvalueEntry entry;
  entry.n = n;
  entry.lambda = lambda;
  entry.multiplicity = 1;
  entry.coeffA = genericCoeffA(p, d, lambda);
  entry.coeffB = Complex(1.0, 0.0);
  entry.residual = std::abs(masterResidual(p, d, lambda));
  if (entry.residual > kMasterResidualTol) {
    throw SolverError("solveBranch: master-equation residual above tolerance");
  }
  return entry;
}

std::vector<EigenvalueEntry> solveBranchRange(const BoundaryParams& p,
                                              const IntervalPair& d, long nLo,
                                              long nHi) {
  std::vector<EigenvalueEntry> out;
  out.reserve(nHi >= nLo ? nHi - nLo + 1 : 0);
  for (long n = nLo; n <= nHi; ++n) {
    out.push_back(solveBranch(p, d, n));
  }
  return out;
}

SpectrumSlice closedFormW1(const BoundaryParams& p, const IntervalPair& d,
                           double lo, double hi, double mergeTol) {
  p.validate();
  d.validate();
  if (std::abs(p.w - 1.0) > kEndpointWindow) {
    throw WrongRegimeError("closedFormW1: requires w = 1");
  }
  if (hi <= lo) throw std::domain_error("closedFormW1: empty window");

  const double r = d.span();
  struct Point {
    double lambda;
    int family;  // 0: χ_I1 family, 1: χ_I2 family
    long index;
  };
  std::vector<Point> pts;

  {  // Λ₁ = −φ + Z
    auto [nLo, nHi] = latticeIndexRange(-p.phi, 1.0, lo, hi);
    for (long n = nLo; n <= nHi; ++n) {
      pts.push_back({-p.phi + static_cast<double>(n), 0, n});
    }
  }
  {  // Λ₂ = (φ−θ)/(β−α) + (1/(β−α))·Z
    const double base = (p.phi - p.theta) / r;
    auto [nLo, nHi] = latticeIndexRange(base, 1.0 / r, lo, hi);
    for (long n = nLo; n <= nHi; ++n) {
      pts.push_back({base + static_cast<double>(n) / r, 1, n});
    }
  }
  std::sort(pts.begin(), pts.end(),
            [](const Point& x, const Point& y) { return x.lambda < y.lambda; });

  // Coincidence Λ₁ ∩ Λ₂: with β−α = p/q exact, −φ+n = (φ−θ+m)·q/p reduces to
  // p·n − q·m = (p+q)φ − qθ, decidable in integers once the right-hand side
  // is pinned to the nearest integer.
  bool exactMode = false;
  long long P = 0, Q = 0, K = 0;
  if (d.lengthRatio) {
    P = d.lengthRatio->num;
    Q = d.lengthRatio->den;
    const double rho = static_cast<double>(P + Q) * p.phi - Q * p.theta;
    K = std::llround(rho);
    // if rho is not an integer the defining equation has no solutions and
    // the lattices are disjoint
    exactMode = std::abs(rho - static_cast<double>(K)) <= mergeTol;
  }
  auto coincide = [&](const Point& x, const Point& y) {
    if (x.family == y.family) return false;
    if (d.lengthRatio) {
      if (!exactMode) return false;
      const Point& l1 = x.family == 0 ? x : y;
      const Point& l2 = x.family == 0 ? y : x;
      return P * l1.index - Q * l2.index == K;
    }
    return std::abs(x.lambda - y.lambda) < mergeTol;
  };

  SpectrumSlice slice;
  slice.lo = lo;
  slice.hi = hi;
  slice.structure = SpectrumStructure::kLatticeUnion;
  long ordinal = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EigenvalueEntry entry;
    entry.n = ordinal++;
    entry.lambda = pts[i].lambda;
    if (i + 1 < pts.size() && coincide(pts[i], pts[i + 1])) {
      entry.multiplicity = 2;
      const bool firstIsI1 = pts[i].family == 0;
      entry.lambda = firstIsI1 ? pts[i].lambda : pts[i + 1].lambda;
      entry.coeffA = Complex(1.0, 0.0);
      entry.coeffB = Complex(0.0, 0.0);
      entry.coeffA2 = Complex(0.0, 0.0);
      entry.coeffB2 = Complex(1.0, 0.0);
      ++i;
    } else {
      entry.multiplicity = 1;
      if (pts[i].family == 0) {
        entry.coeffA = Complex(1.0, 0.0);
        entry.coeffB = Complex(0.0, 0.0);
      } else {
        entry.coeffA = Complex(0.0, 0.0);
        entry.coeffB = Complex(1.0, 0.0);
      }
    }
    entry.residual = std::abs(masterResidual(p, d, entry.lambda));
    slice.entries.push_back(entry);
  }
  return slice;
}

SpectrumSlice closedFormW0(const BoundaryParams& p, const IntervalPair& d,
                           double lo, double hi) {
  p.validate();
  d.validate();
  if (p.w > kEndpointWindow) {
    throw WrongRegimeError("closedFormW0: requires w = 0");
  }
  if (hi <= lo) throw std::domain_error("closedFormW0: empty window");

  const double L = d.totalLength();
  const double base = (0.5 - p.theta) / L;
  const double step = 1.0 / L;

  SpectrumSlice slice;
  slice.lo = lo;
  slice.hi = hi;
  slice.structure = SpectrumStructure::kSingleLattice;
  auto [nLo, nHi] = latticeIndexRange(base, step, lo, hi);
  for (long n = nLo; n <= nHi; ++n) {
    EigenvalueEntry entry;
    entry.n = n;
    entry.lambda = base + static_cast<double>(n) * step;
    entry.multiplicity = 1;
    // a = −e(θ−ψ+βλ_n), b = 1 (from the boundary condition rows at w = 0)
    entry.coeffA = -e(p.theta - p.psi + d.beta * entry.lambda);
    entry.coeffB = Complex(1.0, 0.0);
    entry.residual = std::abs(masterResidual(p, d, entry.lambda));
    slice.entries.push_back(entry);
  }
  return slice;
}

SpectrumSlice computeSpectrum(const BoundaryParams& p, const IntervalPair& d,
                              double lo, double hi) {
  p.validate();
  d.validate();
  if (hi <= lo) throw std::domain_error("computeSpectrum: empty window");
  if (p.w <= kEndpointWindow) return closedFormW0(p, d, lo, hi);
  if (p.w >= 1.0 - kEndpointWindow) return closedFormW1(p, d, lo, hi);

  SpectrumSlice slice;
  slice.lo = lo;
  slice.hi = hi;
  const long nLo = static_cast<long>(std::ceil(hFunction(p, d, lo) - 1e-12));
  const long nHi = static_cast<long>(std::floor(hFunction(p, d, hi) + 1e-12));
  for (long n = nLo; n <= nHi; ++n) {
    EigenvalueEntry entry = solveBranch(p, d, n);
    if (entry.lambda < lo - 1e-12 || entry.lambda > hi + 1e-12) continue;
    slice.entries.push_back(entry);
  }
  if (d.rationalLength()) {
    slice.structure = SpectrumStructure::kRationalPeriodic;
    slice.basePointsPerPeriod = d.lengthRatio->num + d.lengthRatio->den;
    slice.period = d.lengthRatio->den;
  } else {
    slice.structure = SpectrumStructure::kAperiodic;
  }
  return slice;
}

double separationDelta(const IntervalPair& d) {
  d.validate();
  const double L = d.totalLength();
  // |d/dt ⟨e_t|1⟩| <= 2π ∫_Ω |x| dx = π(1 + β² − α²): Lipschitz guard for
  // the scan, so the returned δ is certified, not sampled.
  const double M = M_PI * (1.0 + d.beta * d.beta - d.alpha * d.alpha);
  double step = 1e-4 / std::max(1.0, L);
  for (int attempt = 0; attempt < 8; ++attempt) {
    double certified = 0.0;
    bool found = false;
    const double tMax = 4.0 + 16.0 / L;
    for (double t = step; t <= tMax; t += step) {
      const double margin = std::abs(expIntegralOverOmega(d, t)) - 0.5 * L;
      if (margin > M * step) {
        certified = t;
      } else {
        found = certified > 0.0;
        break;
      }
    }
    if (found) return certified;
    step *= 0.125;  // first sample already too close to the crossing
  }
  throw SolverError("separationDelta: could not certify a positive delta");
}

double branchGapLowerBound(const BoundaryParams& p, const IntervalPair& d) {
  requireGeneric(p, "branchGapLowerBound");
  return 1.0 / (d.span() + (1.0 + p.w) / (1.0 - p.w));
}

LatticeDecomposition latticeDecomposition(const BoundaryParams& p,
                                          const IntervalPair& d) {
  p.validate();
  d.validate();
  requireGeneric(p, "latticeDecomposition");
  if (!d.rationalLength()) {
    throw std::domain_error(
        "latticeDecomposition: requires an exact rational length tag");
  }
  const long P = static_cast<long>(d.lengthRatio->num);
  const long Q = static_cast<long>(d.lengthRatio->den);
  const long count = P + Q;

  LatticeDecomposition out;
  out.period = Q;
  out.baseSet = solveBranchRange(p, d, 0, count - 1);

  const double lambda0 = out.baseSet.front().lambda;
  for (const auto& entry : out.baseSet) {
    if (entry.lambda < lambda0 - 1e-12 ||
        entry.lambda >= lambda0 + static_cast<double>(Q) + 1e-12) {
      throw SolverError("latticeDecomposition: base set escapes [λ₀, λ₀+q)");
    }
  }
  // shift identity λ_{n+p+q} = λ_n + q
  for (long n : {0L, count / 2, count - 1}) {
    const double shifted = solveBranch(p, d, n + count).lambda;
    if (std::abs(shifted - (out.baseSet[n].lambda + static_cast<double>(Q))) >
        1e-9) {
      throw SolverError("latticeDecomposition: shift identity violated");
    }
  }
  return out;
}

std::vector<double> fractionalOrbit(const BoundaryParams& p,
                                    const IntervalPair& d, int count) {
  p.validate();
  d.validate();
  requireGeneric(p, "fractionalOrbit");
  if (d.rationalLength()) {
    throw std::domain_error(
        "fractionalOrbit: length is rational; the spectrum is periodic");
  }
  if (count <= 0) throw std::domain_error("fractionalOrbit: count must be > 0");
  std::vector<double> out;
  out.reserve(count);
  for (int n = 0; n < count; ++n) {
    out.push_back(wrapUnit(solveBranch(p, d, n).lambda));
  }
  return out;
}

double coveringRadius(const std::vector<double>& points) {
  if (points.empty()) return 0.5;
  std::vector<double> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  double maxGap = 1.0 - sorted.back() + sorted.front();  // wrap-around gap
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    maxGap = std::max(maxGap, sorted[i] - sorted[i - 1]);
  }
  return 0.5 * maxGap;
}

}  // namespace twospec
