#include "tverberg/simplex_frame.hpp"

#include <algorithm>
#include <stdexcept>

namespace tverberg {

namespace {

RMatrix invert(const RMatrix& m) {
  const std::size_t n = m.rows();
  RMatrix inv(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    RVector e(n);
    e[col] = 1;
    auto sol = solve_linear(m, e);
    if (!sol || !sol->nullspace.empty())
      throw std::invalid_argument("singular basis");
    for (std::size_t i = 0; i < n; ++i) inv(i, col) = sol->particular[i];
  }
  return inv;
}

}  // namespace

SimplexFrame::SimplexFrame(std::vector<RVector> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2)
    throw std::invalid_argument("frame needs at least two vertices");
  const std::size_t d = vertices_.size() - 1;
  RVector sum(d);
  for (const auto& v : vertices_) {
    if (v.size() != d)
      throw std::invalid_argument("frame vertex has wrong dimension");
    sum += v;
  }
  if (!sum.is_zero())
    throw std::invalid_argument("frame vertices must sum to zero");
  for (std::size_t skip = 0; skip <= d; ++skip) {
    RMatrix m;
    for (std::size_t i = 0; i <= d; ++i)
      if (i != skip) m.push_row(vertices_[i]);
    if (rank(m) != d)
      throw std::invalid_argument("a d-subset of the frame is dependent");
  }
  std::vector<RVector> cols(vertices_.begin(), vertices_.end() - 1);
  basis_inverse_ = invert(RMatrix::from_columns(cols));
}

SimplexFrame SimplexFrame::standard(int dimension) {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  std::vector<RVector> vertices;
  RVector last(static_cast<std::size_t>(dimension));
  for (int i = 0; i < dimension; ++i) {
    RVector e(static_cast<std::size_t>(dimension));
    e[i] = 1;
    last -= e;
    vertices.push_back(std::move(e));
  }
  vertices.push_back(std::move(last));
  return SimplexFrame(std::move(vertices));
}

std::vector<Rational> SimplexFrame::nonneg_representation(
    const RVector& x) const {
  const std::size_t d = vertices_.size() - 1;
  if (x.size() != d)
    throw std::invalid_argument("point has wrong dimension for frame");
  // One representation: alpha over p_0..p_{d-1} with alpha_d = 0.  The full
  // family is alpha - lambda * (1,..,1); min coefficient zero pins lambda.
  std::vector<Rational> alpha(d + 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) alpha[i] += basis_inverse_(i, j) * x[j];
  }
  Rational lambda = alpha[0];
  for (std::size_t i = 1; i <= d; ++i) lambda = std::min(lambda, alpha[i]);
  for (auto& a : alpha) a -= lambda;
  return alpha;
}

IndexSet SimplexFrame::support(const RVector& x) const {
  const auto xi = nonneg_representation(x);
  IndexSet s;
  for (std::size_t i = 0; i < xi.size(); ++i)
    if (xi[i] > 0) s.insert(static_cast<int>(i));
  return s;
}

RVector SimplexFrame::combination(
    const std::vector<Rational>& coefficients) const {
  if (coefficients.size() != vertices_.size())
    throw std::invalid_argument("coefficient count mismatch");
  RVector out(static_cast<std::size_t>(dimension()));
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    out += coefficients[i] * vertices_[i];
  return out;
}

}  // namespace tverberg
