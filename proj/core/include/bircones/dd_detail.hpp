#ifndef BIRCONES_DD_DETAIL_HPP
#define BIRCONES_DD_DETAIL_HPP

#include "bircones/rational.hpp"

// Double description internals. Exposed in a header so that the chamber
// enumerator can drive per-cell insertions with the same machinery; not part
// of the stable surface of the library.

namespace bircones::dd {

Rational dot(const RationalVector& a, const RationalVector& b);

/// Cone
///   span(lineality) + cone(rays) = { x : r.x >= 0 for every r in inserted }.
/// Rays are extreme modulo the lineality space; `inserted` records every
/// halfspace that actually cut the cone (sign included), which is exactly
/// what the rank-based adjacency test needs.
struct DDState {
  int dim = 0;
  std::vector<RationalVector> lineality;
  std::vector<RationalVector> rays;
  std::vector<RationalVector> inserted;

  bool adjacent(const RationalVector& p, const RationalVector& q) const;
  RationalVector cut_lineality(const RationalVector& h);
  RationalVector interior_point() const;
};

/// Intersects the state with { h.x >= 0 }, keeping the nonnegative side.
/// Returns false when the cone was already contained in the halfspace (state
/// untouched, nothing recorded), true when it was cut.
bool insert_halfspace(DDState& state, const RationalVector& h);

/// Chamber-style split: when the hyperplane h = 0 separates the cell into two
/// full-dimensional pieces, `cell` becomes the piece on the positive side,
/// `other` the one on the negative side, and true is returned. Otherwise the
/// cell is left untouched (whichever side it lies on) and false is returned.
bool split_by_hyperplane(DDState& cell, const RationalVector& h, DDState& other);

DDState full_space(int dim);

}  // namespace bircones::dd

#endif
