// Parameter and geometry types for the momentum operators P_B on
// Ω = [0,1] ∪ [α,β], plus the L²(Ω) inner product machinery.
//
// The boundary matrix follows the U(2) parameterization
//
//     B = [  w·e(φ)          −√(1−w²)·e(θ−ψ) ]
//         [  √(1−w²)·e(ψ)     w·e(θ−φ)       ]
//
// with 0 ≤ w ≤ 1 and all angles in cycles. B couples the right-endpoint
// values (f(1), f(β)) to the left-endpoint values (f(0), f(α)).
#pragma once

#include <Eigen/Dense>
#include <optional>

#include "twospec/cycles.hpp"
#include "twospec/rational.hpp"

namespace twospec {

struct BoundaryParams {
  double w = 0.5;      // radial U(2) parameter, in [0,1]
  double phi = 0.0;    // φ, cycles
  double psi = 0.0;    // ψ, cycles
  double theta = 0.0;  // θ, cycles

  void validate() const;
};

// Geometry of the second interval. I₁ = [0,1] is fixed by the affine
// normalization; only β−α enters the spectra, but α and β both enter the
// eigenfunctions and the spectral-pair conditions.
//
// Whether β−α is rational is a declared fact, not something floats can
// decide: carry an exact p/q tag when the caller knows it, otherwise the
// length is treated as irrational.
struct IntervalPair {
  double alpha = 2.0;
  double beta = 3.0;
  std::optional<Rational> lengthRatio;  // exact β−α when rational

  IntervalPair() = default;
  IntervalPair(double a, double b) : alpha(a), beta(b) { validate(); }
  IntervalPair(double a, double b, Rational lengthTag)
      : alpha(a), beta(b), lengthRatio(lengthTag) {
    validate();
  }

  void validate() const;

  double span() const {
    return lengthRatio ? lengthRatio->value() : beta - alpha;
  }
  double totalLength() const { return 1.0 + span(); }
  bool rationalLength() const { return lengthRatio.has_value(); }
  // α = 1 is accepted but degenerate: the intervals touch and function
  // values at the junction are one-sided limits.
  bool touching() const { return alpha == 1.0; }
};

// B(p) as above. Unitary to roundoff for every valid parameter set.
Eigen::Matrix2cd buildBoundaryMatrix(const BoundaryParams& p);

// Max entrywise deviation of B*B from the identity.
double unitarityDefect(const Eigen::Matrix2cd& B);

// A formal eigenfunction of the maximal operator: (a·χ_I1 + b·χ_I2)·e_λ.
struct PiecewiseExp {
  Complex a{1.0, 0.0};
  Complex b{1.0, 0.0};
  double lambda = 0.0;
};

// ∫_lo^hi e(t x) dx, exact through t = 0.
Complex segmentExpIntegral(double t, double lo, double hi);

// ∫_Ω e(t x) dx = ⟨e_t | 1⟩. Equals the total length L at t = 0.
Complex expIntegralOverOmega(const IntervalPair& d, double t);

// Two-interval L² inner product ⟨f | g⟩ = ∫_I1 f·conj(g) + ∫_I2 f·conj(g),
// via the closed-form antiderivative (no quadrature).
Complex innerProduct(const IntervalPair& d, const PiecewiseExp& f,
                     const PiecewiseExp& g);

}  // namespace twospec
