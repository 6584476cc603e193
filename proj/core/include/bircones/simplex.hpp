#ifndef BIRCONES_SIMPLEX_HPP
#define BIRCONES_SIMPLEX_HPP

#include <optional>

#include "bircones/rational.hpp"

namespace bircones {

/// Exact phase-1 simplex with Bland's rule (smallest-index pivots), so every
/// call terminates. Feasibility of { x >= 0 : A x = b }; returns a witness
/// when the system is feasible.
std::optional<RationalVector> feasible_point_nonneg(const RationalMatrix& A,
                                                    const RationalVector& b);

/// Feasibility of { x in R^d : M x >= rhs } with free variables.
std::optional<RationalVector> feasible_point_geq(const RationalMatrix& M,
                                                 const RationalVector& rhs);

/// Membership of v in the conic hull of `gens` (all vectors of equal length).
bool in_conic_hull(const std::vector<RationalVector>& gens, const RationalVector& v);

/// Witness of { x : row . x >= 1 for every row } - a point strictly inside the
/// open cone cut out by the rows - or nullopt if the open cone is empty.
std::optional<RationalVector> strict_cone_point(const std::vector<RationalVector>& rows,
                                                Eigen::Index dim);

}  // namespace bircones

#endif
