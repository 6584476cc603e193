#ifndef BIRCONES_LINALG_HPP
#define BIRCONES_LINALG_HPP

#include <optional>

#include "bircones/rational.hpp"

namespace bircones {

/// One exact solution of A x = b, or nullopt when the system is inconsistent.
/// Gaussian elimination over Q with fixed pivot order (first nonzero entry in
/// column order), hence deterministic.
std::optional<RationalVector> solve(const RationalMatrix& A, const RationalVector& b);

/// Exact rank over Q.
int rank(const RationalMatrix& A);

/// Basis of the right kernel {x : A x = 0}, one column per basis vector.
RationalMatrix kernel_basis(const RationalMatrix& A);

/// Exact inverse of a square matrix, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& A);

/// Rows = vectors. Convenience for rank/kernel over a vector list.
RationalMatrix stack_rows(const std::vector<RationalVector>& rows, Eigen::Index cols);

}  // namespace bircones

#endif
