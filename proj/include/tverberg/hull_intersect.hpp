#pragma once

#include <vector>

#include "tverberg/linalg.hpp"
#include "tverberg/lp.hpp"

namespace tverberg {

enum class Verdict { nonempty, empty };

// Evidence that k convex hulls do or do not share a point.  A nonempty
// verdict carries a common point and one convex-coefficient list per set; an
// empty verdict carries multipliers refuting the system of
// feasibility_system() row by row.
struct IntersectionCertificate {
  Verdict verdict = Verdict::empty;
  RVector common_point;
  std::vector<std::vector<Rational>> coefficients;
  std::vector<Rational> infeasibility_multipliers;
};

struct FeasibilitySystem {
  RMatrix a;
  RVector b;
};

// Equality system whose nonnegative solutions are exactly the coefficient
// tuples giving every set the same convex combination: one unit-sum row per
// set, then d rows per set past the first matching its combination against
// set 0, coordinate by coordinate.  Variables are the coefficients of all
// sets, in input order.
FeasibilitySystem feasibility_system(
    const std::vector<std::vector<RVector>>& sets);

// Do the convex hulls of the given nonempty sets share a point?  Decided by
// exact LP feasibility; the returned certificate is checkable on its own.
IntersectionCertificate hulls_common_point(
    const std::vector<std::vector<RVector>>& sets);

// Re-checks every certificate invariant by plain arithmetic, independent of
// any solver state.  False on any violation.
bool verify_certificate(const std::vector<std::vector<RVector>>& sets,
                        const IntersectionCertificate& cert);

// Brute-force reference decision: a common point exists iff some choice of
// affinely independent subsets, one per set and each of at most d+1 points,
// admits a matching convex combination; that combination is then the unique
// solution of a square-solvable linear system, so nonnegativity of the
// solved coefficients settles it.  Exponential; throws when the instance is
// too large.
Verdict oracle_common_point(const std::vector<std::vector<RVector>>& sets);

}  // namespace tverberg
