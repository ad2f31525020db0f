#pragma once

#include <vector>

#include "tverberg/linalg.hpp"

namespace tverberg {

// Feasibility of { A x = b, x >= 0 } decided by exact phase-one simplex with
// Bland's rule (deterministic, no cycling, no tolerances anywhere).
struct FeasibilityResult {
  bool feasible = false;
  // feasible: x with A x = b, x >= 0.
  std::vector<Rational> solution;
  // infeasible: y with yᵀA <= 0 componentwise and yᵀb > 0.
  std::vector<Rational> multipliers;
};

FeasibilityResult solve_equality_feasibility(const RMatrix& a,
                                             const RVector& b);

}  // namespace tverberg
