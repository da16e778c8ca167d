// Eigenvalue enumeration for P_B. A real λ is an eigenvalue iff
//
//     F(λ) = (e(φ+λ) − w)·e(θ−φ+(β−α)λ) − (w·e(φ+λ) − 1) = 0.
//
// For 0 < w < 1 the equation linearizes through the argument lift:
// λ is an eigenvalue iff h(λ) = θ − φ + (β−α)λ − g(φ+λ) ∈ Z, and h is
// strictly increasing, so the spectrum is the ordered branch list
// {λ_n : h(λ_n) = n}. At w = 0 and w = 1 the spectrum has closed lattice
// forms and the lift degenerates; those regimes are routed separately.
#pragma once

#include <optional>
#include <vector>

#include "twospec/domain.hpp"

namespace twospec {

struct EigenvalueEntry {
  long n = 0;             // branch index (h(λ_n) = n for 0 < w < 1)
  double lambda = 0.0;
  int multiplicity = 1;
  Complex coeffA{1.0, 0.0};  // eigenfunction (a·χ_I1 + b·χ_I2)·e_λ
  Complex coeffB{0.0, 0.0};
  // Second basis vector of the eigenspace; meaningful iff multiplicity == 2
  // (only at w = 1, where χ_I1·e_λ and χ_I2·e_λ can share an eigenvalue).
  Complex coeffA2{0.0, 0.0};
  Complex coeffB2{0.0, 0.0};
  double residual = 0.0;  // |F(λ)|
};

enum class SpectrumStructure {
  kLatticeUnion,      // w = 1: Λ₁ ∪ Λ₂
  kSingleLattice,     // w = 0
  kRationalPeriodic,  // 0 < w < 1, β−α = p/q: spectrum = L + qZ
  kAperiodic,         // 0 < w < 1, β−α irrational
};

struct SpectrumSlice {
  std::vector<EigenvalueEntry> entries;  // λ strictly increasing
  double lo = 0.0;
  double hi = 0.0;
  SpectrumStructure structure = SpectrumStructure::kAperiodic;
  // For kRationalPeriodic: |L| = p + q base points per period q.
  std::optional<long> basePointsPerPeriod;
  std::optional<long> period;
};

// F(λ) as above; zero exactly on the spectrum.
Complex masterResidual(const BoundaryParams& p, const IntervalPair& d,
                       double lambda);

// h(t) = θ − φ + (β−α)t − g(φ+t). Requires 0 < w < 1.
double hFunction(const BoundaryParams& p, const IntervalPair& d, double t);

// h'(t) = (β−α) + (1−w²)/(1 − 2w·cos(2π(φ+t)) + w²); bounded between
// (β−α) + (1−w)/(1+w) and (β−α) + (1+w)/(1−w).
double hDerivative(const BoundaryParams& p, const IntervalPair& d, double t);

// Solves h(λ_n) = n by certified bisection (the derivative bounds give an
// a-priori bracket) followed by Newton polish. Requires 0 < w < 1.
EigenvalueEntry solveBranch(const BoundaryParams& p, const IntervalPair& d,
                            long n);

// Ordered branch eigenvalues for n in [nLo, nHi].
std::vector<EigenvalueEntry> solveBranchRange(const BoundaryParams& p,
                                              const IntervalPair& d, long nLo,
                                              long nHi);

// w = 1: Λ₁ = −φ + Z with eigenfunctions χ_I1·e, and
// Λ₂ = (φ−θ)/(β−α) + (1/(β−α))Z with eigenfunctions χ_I2·e. Coinciding
// points get multiplicity two; with a rational length tag the coincidence
// test is exact, otherwise points within mergeTol are identified.
SpectrumSlice closedFormW1(const BoundaryParams& p, const IntervalPair& d,
                           double lo, double hi, double mergeTol = 1e-9);

// w = 0: λ_n = (1/2 − θ + n)/(1 + β − α), multiplicity one, eigenfunction
// coefficients a_n = −e(θ − ψ + β·λ_n), b = 1.
SpectrumSlice closedFormW0(const BoundaryParams& p, const IntervalPair& d,
                           double lo, double hi);

// Window dispatcher: routes w within 1e-12 of the endpoints to the closed
// forms, everything else to the branch solver.
SpectrumSlice computeSpectrum(const BoundaryParams& p, const IntervalPair& d,
                              double lo, double hi);

// Certified δ > 0 with |⟨e_t|1⟩| > L/2 for all |t| ≤ δ, located by a
// Lipschitz-guarded scan plus bisection of the closed-form transform.
double separationDelta(const IntervalPair& d);

// Per-operator gap bound for 0 < w < 1: consecutive branch roots differ by
// at least 1/max h' = 1/((β−α) + (1+w)/(1−w)).
double branchGapLowerBound(const BoundaryParams& p, const IntervalPair& d);

struct LatticeDecomposition {
  std::vector<EigenvalueEntry> baseSet;  // the p+q eigenvalues in [λ₀, λ₀+q)
  long period = 1;                       // q
};

// For 0 < w < 1 and β−α = p/q exactly: spectrum = L + qZ with |L| = p+q.
// Verifies the shift identity λ_{n+p+q} = λ_n + q on sample branches.
LatticeDecomposition latticeDecomposition(const BoundaryParams& p,
                                          const IntervalPair& d);

// Fractional parts [λ_n], n = 0..count−1, for irrational β−α; pairwise
// distinct by the aperiodicity corollary.
std::vector<double> fractionalOrbit(const BoundaryParams& p,
                                    const IntervalPair& d, int count);

// Largest circular gap radius of a point set in [0,1): how far a point of
// the circle can be from the set. Reporting aid for the dense-orbit runs.
double coveringRadius(const std::vector<double>& points);

}  // namespace twospec
