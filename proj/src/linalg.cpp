#include "conecalc/linalg.hpp"

#include <algorithm>

namespace conecalc {

namespace {

// Reduced row echelon form in place; returns pivot column indices.
std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    }
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  RatMatrix w = m;
  return rref(w).size();
}

std::size_t rank_of_rows(const std::vector<RatVector>& rows, std::size_t dim) {
  if (rows.empty()) return 0;
  RatMatrix m(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) throw InputError("rank_of_rows: bad dimension");
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = rows[i][j];
  }
  return rank(m);
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
  RatMatrix w = m;
  const auto pivots = rref(w);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    RatVector v(m.cols, Rational(0));
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -w(r, c);
    }
    basis.push_back(canonicalize(v));
  }
  sort_canonical(basis);
  return basis;
}

std::optional<LinearSolution> solve(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows) throw InputError("solve: dimension mismatch");
  RatMatrix aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols) = b[i];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  RatVector x(m.cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    x[pivots[r]] = aug(r, m.cols);
  }
  return LinearSolution{std::move(x), nullspace(m)};
}

std::optional<RatVector> in_span(const std::vector<RatVector>& vs,
                                 const RatVector& t) {
  if (vs.empty()) {
    if (is_zero(t)) return RatVector{};
    return std::nullopt;
  }
  const std::size_t dim = t.size();
  RatMatrix m(dim, vs.size());
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (vs[k].size() != dim) throw InputError("in_span: dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) m(i, k) = vs[k][i];
  }
  auto sol = solve(m, t);
  if (!sol) return std::nullopt;
  return sol->particular;
}

}  // namespace conecalc
