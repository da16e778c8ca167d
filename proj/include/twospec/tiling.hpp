// Tiling verification by exact endpoint arithmetic. Ω tiles R with the set
// A = F + cZ when Σ_{a∈A} χ_Ω(t−a) = 1 for a.e. t; sampling can miss
// measure-zero defects, so the check sweeps exact rational endpoints over
// the requested window instead.
#pragma once

#include <optional>
#include <vector>

#include "twospec/domain.hpp"
#include "twospec/rational.hpp"

namespace twospec {

// Tiling set A = offsets + period·Z.
struct TilingSet {
  std::vector<Rational> offsets;
  Rational period{1, 1};
};

struct TilingResult {
  bool tiles = false;
  // A point where the indicator sum is not 1 (midpoint of the bad segment).
  std::optional<Rational> witness;
  int defectDepth = 1;  // indicator sum at the witness (0 = gap, >=2 = overlap)
};

// Exact sweep over [windowLo, windowHi]; every translate intersecting the
// window is enumerated, so the verdict is exact on the window's interior.
TilingResult tilesWith(const Rational& alpha, const Rational& beta,
                       const TilingSet& tiling, const Rational& windowLo,
                       const Rational& windowHi);

// Convenience overload: snaps the float endpoints of d to exact rationals
// (denominator <= 10^6 within 1e-13) and sweeps; throws std::domain_error if
// the endpoints have no such rational representation.
TilingResult tilesWith(const IntervalPair& d, const TilingSet& tiling,
                       double windowLo, double windowHi);

}  // namespace twospec
