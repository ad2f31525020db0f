#pragma once

#include <vector>

#include "tverberg/index_set.hpp"
#include "tverberg/linalg.hpp"

namespace tverberg {

// Spanning set p_0,...,p_d of R^d with sum zero, every d of the vertices
// linearly independent.  Both invariants are checked at construction.
class SimplexFrame {
public:
  explicit SimplexFrame(std::vector<RVector> vertices);

  // p_i = e_i for i < d and p_d = -(e_0 + ... + e_{d-1}).
  static SimplexFrame standard(int dimension);

  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  int ray_count() const { return static_cast<int>(vertices_.size()); }
  const RVector& vertex(int i) const { return vertices_[i]; }
  const std::vector<RVector>& vertices() const { return vertices_; }

  // The unique coefficients xi with x = sum xi_i p_i, all xi_i >= 0 and
  // min xi_i = 0.
  std::vector<Rational> nonneg_representation(const RVector& x) const;

  // Indices with xi_i > 0 in the representation above.  Always a proper
  // subset of {0,...,d}.
  IndexSet support(const RVector& x) const;

  // sum coefficients_i * p_i
  RVector combination(const std::vector<Rational>& coefficients) const;

  bool operator==(const SimplexFrame&) const = default;

private:
  std::vector<RVector> vertices_;
  RMatrix basis_inverse_;  // inverse of the matrix with columns p_0..p_{d-1}
};

}  // namespace tverberg
