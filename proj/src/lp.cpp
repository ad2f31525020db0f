#include "tverberg/lp.hpp"

#include <stdexcept>

namespace tverberg {

FeasibilityResult solve_equality_feasibility(const RMatrix& a,
                                             const RVector& b) {
  if (a.rows() != b.size())
    throw std::invalid_argument("feasibility: row count mismatch");
  const std::size_t m = a.rows(), n = a.cols();

  // Tableau [A' | I | b'] with rows flipped so b' >= 0; basis = artificials.
  std::vector<std::vector<Rational>> t(m,
                                       std::vector<Rational>(n + m + 1));
  std::vector<int> row_sign(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    const int s = b[i] < 0 ? -1 : 1;
    row_sign[i] = s;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = s * a(i, j);
    t[i][n + i] = 1;
    t[i][n + m] = s * b[i];
  }

  // Reduced-cost row for minimizing the artificial sum; the last slot keeps
  // the negated objective so it updates like any other row.  With the
  // all-artificial basis, z[j] = -sum of column j for structural columns and
  // for the right-hand side, 0 for artificial columns.
  std::vector<Rational> z(n + m + 1);
  for (std::size_t j = 0; j <= n + m; ++j) {
    if (j >= n && j < n + m) continue;
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) s += t[i][j];
    z[j] = -s;
  }

  std::vector<int> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = static_cast<int>(n + i);
  std::vector<char> left_basis(m, 0);  // artificials barred from re-entry

  for (;;) {
    int enter = -1;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (j >= n && left_basis[j - n]) continue;
      if (z[j] < 0) {
        enter = static_cast<int>(j);
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rational ratio = t[i][n + m] / t[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave]))
        leave = static_cast<int>(i), best = ratio;
    }
    if (leave < 0)
      throw std::logic_error("phase-one objective unbounded");  // cannot happen

    const int leaving_var = basis[leave];
    if (leaving_var >= static_cast<int>(n))
      left_basis[leaving_var - static_cast<int>(n)] = 1;
    basis[leave] = enter;

    auto& prow = t[leave];
    const Rational inv = 1 / prow[enter];
    for (auto& v : prow) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (static_cast<int>(i) == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * prow[j];
    }
    if (z[enter] != 0) {
      const Rational f = z[enter];
      for (std::size_t j = 0; j <= n + m; ++j) z[j] -= f * prow[j];
    }
  }

  FeasibilityResult result;
  const Rational objective = -z[n + m];
  if (objective == 0) {
    result.feasible = true;
    result.solution.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < static_cast<int>(n))
        result.solution[basis[i]] = t[i][n + m];
  } else {
    result.feasible = false;
    result.multipliers.resize(m);
    // Reduced cost of artificial i is 1 - y_i; undo the row flips so the
    // certificate refutes the original system.
    for (std::size_t i = 0; i < m; ++i)
      result.multipliers[i] = row_sign[i] * (1 - z[n + i]);
  }
  return result;
}

}  // namespace tverberg
