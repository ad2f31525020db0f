#include "tverberg/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace tverberg {

std::string to_string(const Rational& value) {
  std::ostringstream out;
  out << numerator(value).str();
  if (denominator(value) != 1) out << '/' << denominator(value).str();
  return out.str();
}

Rational parse_rational(const std::string& text) {
  const auto bad = [&] {
    throw std::invalid_argument("not a rational: '" + text + "'");
  };
  const auto slash = text.find('/');
  const std::string num_text = text.substr(0, slash);
  const std::string den_text =
      slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
  const auto is_integer = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = allow_sign && (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!is_integer(num_text, true) || !is_integer(den_text, false)) bad();
  BigInt num(num_text);
  BigInt den(den_text);
  if (den == 0) bad();
  return Rational(num, den);  // constructor canonicalizes
}

bool RVector::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

RVector& RVector::operator+=(const RVector& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other[i];
  return *this;
}

RVector& RVector::operator-=(const RVector& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other[i];
  return *this;
}

RVector& RVector::operator*=(const Rational& scale) {
  for (auto& c : coords_) c *= scale;
  return *this;
}

RVector operator-(RVector a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

Rational dot(const RVector& a, const RVector& b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

RMatrix::RMatrix(std::initializer_list<RVector> rows) {
  for (const auto& r : rows) push_row(r);
}

RMatrix RMatrix::identity(std::size_t n) {
  RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RMatrix RMatrix::from_columns(const std::vector<RVector>& columns) {
  if (columns.empty()) return {};
  RMatrix m(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != m.rows())
      throw std::invalid_argument("ragged column list");
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = columns[j][i];
  }
  return m;
}

void RMatrix::push_row(RVector row) {
  if (rows_.empty())
    cols_ = row.size();
  else if (row.size() != cols_)
    throw std::invalid_argument("ragged row");
  rows_.push_back(std::move(row));
}

RMatrix RMatrix::transposed() const {
  RMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::size_t rank(const RMatrix& m) {
  RMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = col; j < cols; ++j) std::swap(a(r, j), a(pivot, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, col) == 0) continue;
      const Rational f = a(i, col) / a(r, col);
      for (std::size_t j = col; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

std::optional<LinearSolution> solve_linear(const RMatrix& a, const RVector& b) {
  if (a.rows() != b.size())
    throw std::invalid_argument("solve_linear: row count mismatch");
  const std::size_t rows = a.rows(), cols = a.cols();

  // reduced row echelon form of [A | b]
  RMatrix m(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = a(i, j);
    m(i, cols) = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j <= cols; ++j) std::swap(m(r, j), m(pivot, j));
    const Rational inv = 1 / m(r, col);
    for (std::size_t j = col; j <= cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j <= cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m(i, cols) != 0) return std::nullopt;  // 0 = nonzero row

  LinearSolution sol;
  sol.particular = RVector(cols);
  for (std::size_t i = 0; i < pivot_col.size(); ++i)
    sol.particular[pivot_col[i]] = m(i, cols);

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RVector v(cols);
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = -m(i, free_col);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

}  // namespace tverberg
