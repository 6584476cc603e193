#include "bircones/linalg.hpp"

namespace bircones {

namespace {

struct Echelon {
  RationalMatrix m;             // row echelon form
  std::vector<int> pivot_cols;  // pivot column of each nonzero row
};

Echelon row_echelon(RationalMatrix m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Echelon e;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (m(i, c) != 0) { pivot = i; break; }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    e.pivot_cols.push_back(static_cast<int>(c));
    ++r;
  }
  e.m = std::move(m);
  return e;
}

}  // namespace

RationalMatrix stack_rows(const std::vector<RationalVector>& rows, Eigen::Index cols) {
  RationalMatrix m(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("stack_rows: ragged input");
    m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  return m;
}

int rank(const RationalMatrix& A) {
  if (A.rows() == 0 || A.cols() == 0) return 0;
  return static_cast<int>(row_echelon(A).pivot_cols.size());
}

std::optional<RationalVector> solve(const RationalMatrix& A, const RationalVector& b) {
  if (A.rows() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  const Eigen::Index rows = A.rows(), cols = A.cols();
  RationalMatrix aug(rows, cols + 1);
  aug.leftCols(cols) = A;
  aug.col(cols) = b;
  Echelon e = row_echelon(std::move(aug));
  // A pivot in the last column means 0 = nonzero: inconsistent.
  for (int c : e.pivot_cols)
    if (c == static_cast<int>(cols)) return std::nullopt;
  RationalVector x = RationalVector::Zero(cols);
  for (int i = static_cast<int>(e.pivot_cols.size()) - 1; i >= 0; --i) {
    const Eigen::Index pc = e.pivot_cols[static_cast<std::size_t>(i)];
    Rational rhs = e.m(i, cols);
    for (Eigen::Index j = pc + 1; j < cols; ++j) rhs -= e.m(i, j) * x[j];
    x[pc] = rhs / e.m(i, pc);
  }
  return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& A) {
  const Eigen::Index n = A.rows();
  if (A.cols() != n) throw std::invalid_argument("inverse: square matrix required");
  RationalMatrix aug(n, 2 * n);
  aug.leftCols(n) = A;
  aug.rightCols(n) = RationalMatrix::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (aug(i, c) != 0) { pivot = i; break; }
    if (pivot < 0) return std::nullopt;
    if (pivot != c) aug.row(pivot).swap(aug.row(c));
    aug.row(c) /= aug(c, c);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || aug(i, c) == 0) continue;
      aug.row(i) -= aug(i, c) * aug.row(c);
    }
  }
  return RationalMatrix(aug.rightCols(n));
}

RationalMatrix kernel_basis(const RationalMatrix& A) {
  const Eigen::Index cols = A.cols();
  Echelon e = row_echelon(A);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

  RationalMatrix basis(cols, static_cast<Eigen::Index>(free_cols.size()));
  basis.setZero();
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    RationalVector x = RationalVector::Zero(cols);
    x[free_cols[k]] = 1;
    for (int i = static_cast<int>(e.pivot_cols.size()) - 1; i >= 0; --i) {
      const Eigen::Index pc = e.pivot_cols[static_cast<std::size_t>(i)];
      Rational rhs = 0;
      for (Eigen::Index j = pc + 1; j < cols; ++j) rhs -= e.m(i, j) * x[j];
      x[pc] = rhs / e.m(i, pc);
    }
    basis.col(static_cast<Eigen::Index>(k)) = x;
  }
  return basis;
}

}  // namespace bircones
