#ifndef BIRCONES_CONE_HPP
#define BIRCONES_CONE_HPP

#include <memory>
#include <vector>

#include "bircones/rational.hpp"

namespace bircones {

/// Facet/equation description of a closed cone:
///   C = { x : f.x >= 0 for every facet f,  e.x = 0 for every equation e }.
/// Facets are irredundant; equations span the orthogonal complement of the
/// linear span of C.
struct HRep {
  std::vector<RationalVector> facets;
  std::vector<RationalVector> equations;
};

/// Minimal generator description: extreme rays modulo the lineality space,
/// plus a basis of the lineality space. Pointed cones have empty lineality.
struct GeneratorDescription {
  std::vector<RationalVector> rays;
  std::vector<RationalVector> lineality;
  bool pointed() const { return lineality.empty(); }
  /// rays together with +/- lineality basis vectors; generates the cone.
  std::vector<RationalVector> all_generators() const;
};

/// V-representation of { x : h.x >= 0 for h in halfspaces, e.x = 0 for e in
/// equations } via the double description method (Motzkin-Burger insertion
/// with rank-based adjacency). Output is deterministic: inputs are processed
/// in lexicographic order; rays come back ray_primitive and sorted.
GeneratorDescription cone_from_halfspaces(int dim,
                                          const std::vector<RationalVector>& halfspaces,
                                          const std::vector<RationalVector>& equations = {});

/// Rational polyhedral cone given by finitely many generators. Generators are
/// stored ray_primitive, deduplicated and lexicographically sorted; they need
/// not be extremal. The facet description is computed once on demand and
/// cached; all cached state is immutable after construction, so cones are
/// safe to share across threads.
class Cone {
 public:
  Cone(int ambient_dim, const std::vector<RationalVector>& generators);

  static Cone positive_orthant(int dim);
  /// The cone {0} in the given ambient dimension.
  static Cone zero(int dim) { return Cone(dim, {}); }

  int ambient_dim() const { return ambient_dim_; }
  const std::vector<RationalVector>& generators() const { return generators_; }

  const HRep& hrep() const;

  bool contains(const RationalVector& v) const;
  /// Topological interior test; a cone that is not full-dimensional has empty
  /// interior, so the plain test returns false for it. With relative = true
  /// the test is taken inside the linear span.
  bool interior_contains(const RationalVector& v, bool relative = false) const;

  bool is_full_dimensional() const { return hrep().equations.empty(); }
  bool is_pointed() const;
  int dimension() const;

 private:
  int ambient_dim_;
  std::vector<RationalVector> generators_;
  mutable std::shared_ptr<const HRep> hrep_;
};

/// Dual cone { y : y.x >= 0 for all x in c }. For a non-pointed dual (c not
/// spanning) the result's generator list carries +/- basis vectors of the
/// lineality space. Errors on ambient dimension 0.
Cone dual(const Cone& c);

struct ExtremalRays {
  std::vector<RationalVector> rays;
  std::vector<RationalVector> lineality;
  bool pointed;
};

/// Unique minimal generating data of the closed cone generated by c: extreme
/// rays for pointed cones; rays modulo lineality plus a lineality basis (and
/// pointed = false) otherwise.
ExtremalRays extremal_rays(const Cone& c);

Cone intersect(const Cone& a, const Cone& b);
Cone intersect_all(const std::vector<Cone>& cones);

/// Equality of the underlying closed cones (mutual containment of
/// generators; equivalently the primitive extremal-ray sets coincide).
bool equal(const Cone& a, const Cone& b);

}  // namespace bircones

#endif
