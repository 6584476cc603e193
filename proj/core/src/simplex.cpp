#include "bircones/simplex.hpp"

#include "bircones/linalg.hpp"

namespace bircones {

namespace {

// Dense phase-1 tableau: minimize the sum of artificial variables for
// A x = b, x >= 0. Returns the structural part of a feasible point, or
// nullopt when the optimum is positive.
std::optional<RationalVector> phase1(const RationalMatrix& A, const RationalVector& b) {
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  if (m == 0) return RationalVector::Zero(n);

  // Tableau [A | I | b] with b >= 0 after row sign normalization.
  RationalMatrix t(m, n + m + 1);
  t.setZero();
  for (Eigen::Index i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (Eigen::Index j = 0; j < n; ++j) t(i, j) = flip ? Rational(-A(i, j)) : A(i, j);
    t(i, n + i) = 1;
    t(i, n + m) = flip ? Rational(-b[i]) : b[i];
  }
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;

  // Reduced cost row for minimizing the artificial sum: d_j = c_j - sum_i t(i,j).
  RationalVector d(n + m);
  for (Eigen::Index j = 0; j < n + m; ++j) {
    Rational s = 0;
    for (Eigen::Index i = 0; i < m; ++i) s += t(i, j);
    d[j] = (j < n ? Rational(0) : Rational(1)) - s;
  }
  Rational objective = 0;
  for (Eigen::Index i = 0; i < m; ++i) objective += t(i, n + m);

  while (true) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n + m; ++j) {
      if (d[j] < 0) { enter = j; break; }
    }
    if (enter < 0) break;

    Eigen::Index leave = -1;
    Rational best_ratio = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      Rational ratio = t(i, n + m) / t(i, enter);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[static_cast<std::size_t>(i)] <
                                      basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return std::nullopt;  // unbounded phase-1 cannot occur; defensively bail

    const Rational piv = t(leave, enter);
    for (Eigen::Index j = 0; j <= n + m; ++j) t(leave, j) /= piv;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      const Rational f = t(i, enter);
      for (Eigen::Index j = 0; j <= n + m; ++j) t(i, j) -= f * t(leave, j);
    }
    const Rational fd = d[enter];
    if (fd != 0) {
      for (Eigen::Index j = 0; j < n + m; ++j) d[j] -= fd * t(leave, j);
      objective -= fd * t(leave, n + m);
    }
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  if (objective != 0) return std::nullopt;
  RationalVector x = RationalVector::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (basis[static_cast<std::size_t>(i)] < n) x[basis[static_cast<std::size_t>(i)]] = t(i, n + m);
  }
  return x;
}

}  // namespace

std::optional<RationalVector> feasible_point_nonneg(const RationalMatrix& A,
                                                    const RationalVector& b) {
  if (A.rows() != b.size()) throw std::invalid_argument("feasible_point_nonneg: dimension mismatch");
  return phase1(A, b);
}

std::optional<RationalVector> feasible_point_geq(const RationalMatrix& M,
                                                 const RationalVector& rhs) {
  if (M.rows() != rhs.size()) throw std::invalid_argument("feasible_point_geq: dimension mismatch");
  const Eigen::Index m = M.rows();
  const Eigen::Index d = M.cols();
  // x = u - w with u, w >= 0; slack s >= 0 turns M x >= rhs into M u - M w - s = rhs.
  RationalMatrix A(m, 2 * d + m);
  A.setZero();
  A.block(0, 0, m, d) = M;
  A.block(0, d, m, d) = -M;
  for (Eigen::Index i = 0; i < m; ++i) A(i, 2 * d + i) = -1;
  auto sol = phase1(A, rhs);
  if (!sol) return std::nullopt;
  RationalVector x(d);
  for (Eigen::Index j = 0; j < d; ++j) x[j] = (*sol)[j] - (*sol)[d + j];
  return x;
}

bool in_conic_hull(const std::vector<RationalVector>& gens, const RationalVector& v) {
  if (gens.empty()) return is_zero(v);
  const Eigen::Index d = v.size();
  RationalMatrix A(d, static_cast<Eigen::Index>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].size() != d) throw std::invalid_argument("in_conic_hull: dimension mismatch");
    A.col(static_cast<Eigen::Index>(j)) = gens[j];
  }
  return phase1(A, v).has_value();
}

std::optional<RationalVector> strict_cone_point(const std::vector<RationalVector>& rows,
                                                Eigen::Index dim) {
  if (rows.empty()) return RationalVector::Zero(dim);
  RationalMatrix M = stack_rows(rows, dim);
  RationalVector one = RationalVector::Constant(M.rows(), 1);
  return feasible_point_geq(M, one);
}

}  // namespace bircones
