#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "tverberg/rational.hpp"

namespace tverberg {

class RVector {
public:
  RVector() = default;
  explicit RVector(std::size_t dim) : coords_(dim) {}
  RVector(std::initializer_list<Rational> coords) : coords_(coords) {}
  explicit RVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  std::size_t size() const { return coords_.size(); }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  auto begin() { return coords_.begin(); }
  auto end() { return coords_.end(); }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;

  RVector& operator+=(const RVector& other);
  RVector& operator-=(const RVector& other);
  RVector& operator*=(const Rational& scale);

  friend RVector operator+(RVector a, const RVector& b) { return a += b; }
  friend RVector operator-(RVector a, const RVector& b) { return a -= b; }
  friend RVector operator*(const Rational& s, RVector v) { return v *= s; }
  friend RVector operator-(RVector a);

  bool operator==(const RVector&) const = default;

private:
  std::vector<Rational> coords_;
};

Rational dot(const RVector& a, const RVector& b);

class RMatrix {
public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows, RVector(cols)), cols_(cols) {}
  RMatrix(std::initializer_list<RVector> rows);

  static RMatrix identity(std::size_t n);
  static RMatrix from_columns(const std::vector<RVector>& columns);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return rows_[i][j];
  }
  const RVector& row(std::size_t i) const { return rows_[i]; }
  void push_row(RVector row);

  RMatrix transposed() const;

  bool operator==(const RMatrix&) const = default;

private:
  std::vector<RVector> rows_;
  std::size_t cols_ = 0;
};

// Rank over the rationals, by exact elimination.  Pivot choice is the first
// nonzero entry in column order, so runs are deterministic.
std::size_t rank(const RMatrix& m);

struct LinearSolution {
  RVector particular;               // one solution of A x = b
  std::vector<RVector> nullspace;   // basis of { v : A v = 0 }
};

// Exact Gauss-Jordan solve of A x = b.  Returns nullopt when inconsistent;
// throws std::invalid_argument when dimensions do not match.
std::optional<LinearSolution> solve_linear(const RMatrix& a, const RVector& b);

}  // namespace tverberg
