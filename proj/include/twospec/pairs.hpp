// Spectral-pair classification. P_B is a spectral operator when every
// eigenfunction has equal amplitudes a_λ = b_λ, so that {e_λ : λ ∈ Λ_B} is
// an orthogonal basis of L²(Ω) and (Ω, Λ_B) is a spectral pair.
//
// The classification is a sharp dichotomy in the parameters:
//   w = 1      : never spectral.
//   w = 0      : spectral iff β/(1+β−α) ∈ N and
//                −ψ + (θ−1/2)(1−α)/(1+β−α) ∈ Z.
//   0 < w < 1  : spectral iff α ∈ Z, α > 1, β = α+1, θ−2φ ∈ Z,
//                ψ+(α−1)φ ∈ ½Z, and w ∈ {cos(2π(1+2k)/(4α))}.
#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "twospec/rational.hpp"
#include "twospec/spectrum.hpp"

namespace twospec {

struct ConditionCheck {
  std::string id;
  bool satisfied = false;
  double residual = 0.0;  // distance to the nearest admissible value
};

struct PairVerdict {
  bool isSpectralOperator = false;
  std::vector<ConditionCheck> conditions;
  std::string spectrumDescription;  // closed form, set when spectral
  // Numeric form of the description: spectrum = {cosetReps} + cosetPeriod·Z.
  std::vector<double> cosetReps;
  double cosetPeriod = 0.0;
};

// Evaluates the theorem conditions for the active w-regime; membership tests
// use residual-to-nearest with integerTol on float inputs and the exact
// length tag where it applies.
PairVerdict classifyPair(const BoundaryParams& p, const IntervalPair& d,
                         double integerTol = 1e-9);

struct SetVerdict {
  bool spectral = false;
  std::string reason;
};

// Ω = [0,1]∪[α,β] is a spectral set iff β/(1+β−α) ∈ Z or
// (α integer > 1 and β = α+1).
SetVerdict spectralSetCriterion(const IntervalPair& d,
                                double integerTol = 1e-9);

// Characteristic polynomial for integer endpoints 1 < α < β:
//     p(z) = (z−1)·(1 + z^α·(1 + z + … + z^{β−α−1})) = z^β − z^α + z − 1.
// Its unimodular roots e(λ) are exactly the nonzero λ with ⟨e_λ|1⟩ = 0.
struct CharPolynomial {
  std::vector<long long> coeffs;  // ascending powers, integer

  Complex eval(Complex z) const;
  Complex derivative(Complex z) const;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

CharPolynomial buildCharPolynomial(const IntervalPair& d);

// All complex roots (companion-matrix eigenvalues + one Newton polish each).
std::vector<Complex> polynomialRoots(const CharPolynomial& poly);

// Angles (cycles, in [0,1), sorted) of the roots with ||z|−1| < circleTol.
std::vector<double> rootsOnUnitCircle(const CharPolynomial& poly,
                                      double circleTol = 1e-8);

// Gram matrix G_jk = ⟨e_{λ_j} | e_{λ_k}⟩ over Ω, closed form.
Eigen::MatrixXcd gramMatrix(const std::vector<double>& lambdas,
                            const IntervalPair& d);

}  // namespace twospec
