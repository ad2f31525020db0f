#include "tverberg/hull_intersect.hpp"

#include <cstdint>
#include <stdexcept>

namespace tverberg {

namespace {

void validate_sets(const std::vector<std::vector<RVector>>& sets) {
  if (sets.empty()) throw std::invalid_argument("no sets given");
  if (sets.front().empty()) throw std::invalid_argument("empty set");
  const std::size_t d = sets.front().front().size();
  for (const auto& set : sets) {
    if (set.empty()) throw std::invalid_argument("empty set");
    for (const auto& p : set)
      if (p.size() != d)
        throw std::invalid_argument("mixed point dimensions");
  }
}

}  // namespace

FeasibilitySystem feasibility_system(
    const std::vector<std::vector<RVector>>& sets) {
  validate_sets(sets);
  const std::size_t k = sets.size();
  const std::size_t d = sets.front().front().size();
  std::size_t vars = 0;
  std::vector<std::size_t> offset(k);
  for (std::size_t i = 0; i < k; ++i) {
    offset[i] = vars;
    vars += sets[i].size();
  }

  FeasibilitySystem sys;
  sys.a = RMatrix(k + (k - 1) * d, vars);
  sys.b = RVector(k + (k - 1) * d);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < sets[i].size(); ++j)
      sys.a(i, offset[i] + j) = 1;
    sys.b[i] = 1;
  }
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t c = 0; c < d; ++c) {
      const std::size_t row = k + (i - 1) * d + c;
      for (std::size_t j = 0; j < sets[i].size(); ++j)
        sys.a(row, offset[i] + j) = sets[i][j][c];
      for (std::size_t j = 0; j < sets[0].size(); ++j)
        sys.a(row, offset[0] + j) = -sets[0][j][c];
    }
  }
  return sys;
}

IntersectionCertificate hulls_common_point(
    const std::vector<std::vector<RVector>>& sets) {
  validate_sets(sets);
  const auto sys = feasibility_system(sets);
  const auto lp = solve_equality_feasibility(sys.a, sys.b);

  IntersectionCertificate cert;
  if (!lp.feasible) {
    cert.verdict = Verdict::empty;
    cert.infeasibility_multipliers = lp.multipliers;
    return cert;
  }
  cert.verdict = Verdict::nonempty;
  std::size_t at = 0;
  for (const auto& set : sets) {
    cert.coefficients.emplace_back(lp.solution.begin() + at,
                                   lp.solution.begin() + at + set.size());
    at += set.size();
  }
  const std::size_t d = sets.front().front().size();
  cert.common_point = RVector(d);
  for (std::size_t j = 0; j < sets[0].size(); ++j)
    cert.common_point += cert.coefficients[0][j] * sets[0][j];
  return cert;
}

bool verify_certificate(const std::vector<std::vector<RVector>>& sets,
                        const IntersectionCertificate& cert) {
  if (sets.empty()) return false;
  const std::size_t d = sets.front().front().size();

  if (cert.verdict == Verdict::nonempty) {
    if (cert.common_point.size() != d) return false;
    if (cert.coefficients.size() != sets.size()) return false;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const auto& coeffs = cert.coefficients[i];
      if (coeffs.size() != sets[i].size()) return false;
      Rational sum = 0;
      RVector combo(d);
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] < 0) return false;
        sum += coeffs[j];
        combo += coeffs[j] * sets[i][j];
      }
      if (sum != 1 || combo != cert.common_point) return false;
    }
    return true;
  }

  // Empty verdict: y must refute the feasibility system, i.e. yᵀA <= 0 on
  // every column while yᵀb > 0, so no nonnegative solution can exist.
  const auto sys = feasibility_system(sets);
  const auto& y = cert.infeasibility_multipliers;
  if (y.size() != sys.a.rows()) return false;
  Rational yb = 0;
  for (std::size_t i = 0; i < y.size(); ++i) yb += y[i] * sys.b[i];
  if (yb <= 0) return false;
  for (std::size_t j = 0; j < sys.a.cols(); ++j) {
    Rational col = 0;
    for (std::size_t i = 0; i < y.size(); ++i) col += y[i] * sys.a(i, j);
    if (col > 0) return false;
  }
  return true;
}

namespace {

// Subsets of {0..n-1} with 1..max_size elements, as bitmasks in ascending
// mask order.
std::vector<std::uint32_t> small_subsets(std::size_t n, std::size_t max_size) {
  std::vector<std::uint32_t> out;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t mask = 1; mask < limit; ++mask)
    if (static_cast<std::size_t>(__builtin_popcount(mask)) <= max_size)
      out.push_back(mask);
  return out;
}

}  // namespace

Verdict oracle_common_point(const std::vector<std::vector<RVector>>& sets) {
  validate_sets(sets);
  const std::size_t k = sets.size();
  const std::size_t d = sets.front().front().size();

  std::size_t total_points = 0;
  for (const auto& s : sets) total_points += s.size();
  if (total_points > 18 || d > 6)
    throw std::invalid_argument("oracle instance too large");

  std::vector<std::vector<std::uint32_t>> choices;
  double combos = 1;
  for (const auto& s : sets) {
    choices.push_back(small_subsets(s.size(), d + 1));
    combos *= static_cast<double>(choices.back().size());
    if (combos > 5e6)
      throw std::invalid_argument("oracle instance too large");
  }

  // Variables: the common point x, then one weight per chosen point.  A
  // tuple of affinely independent subsets makes the system uniquely
  // solvable; nonnegative weights then witness the intersection.  If the
  // hulls meet at all, they meet at a vertex of the intersection polytope,
  // and the subsets realizing that vertex pass this test.
  std::vector<std::size_t> pick(k, 0);
  for (;;) {
    std::size_t rows = 0, vars = d;
    std::vector<std::vector<int>> members(k);
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint32_t mask = choices[i][pick[i]];
      for (std::size_t j = 0; j < sets[i].size(); ++j)
        if (mask & (1u << j)) members[i].push_back(static_cast<int>(j));
      vars += members[i].size();
      rows += d + 1;
    }
    RMatrix a(rows, vars);
    RVector b(rows);
    std::size_t var_at = d, row_at = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t c = 0; c < d; ++c) {
        a(row_at + c, c) = -1;
        for (std::size_t j = 0; j < members[i].size(); ++j)
          a(row_at + c, var_at + j) = sets[i][members[i][j]][c];
      }
      for (std::size_t j = 0; j < members[i].size(); ++j)
        a(row_at + d, var_at + j) = 1;
      b[row_at + d] = 1;
      var_at += members[i].size();
      row_at += d + 1;
    }
    if (auto sol = solve_linear(a, b); sol && sol->nullspace.empty()) {
      bool nonneg = true;
      for (std::size_t v = d; v < vars && nonneg; ++v)
        nonneg = sol->particular[v] >= 0;
      if (nonneg) return Verdict::nonempty;
    }

    std::size_t i = 0;
    while (i < k && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == k) break;
  }
  return Verdict::empty;
}

}  // namespace tverberg
