#ifndef BIRCONES_ISOTROPIC_DATA_HPP
#define BIRCONES_ISOTROPIC_DATA_HPP

#include "bircones/rational.hpp"
#include "bircones/report.hpp"

namespace bircones {

/// Closed-form invariants of the ambient isotropic Grassmannian geometry.
/// Everything here is recomputed from the formulas on each call.
struct GeometryFacts {
  int n = 0;
  long long dim_lg = 0;             // n(n+1)/2
  long long fano_index_lg = 0;      // n+1
  long long dim_og_plus = 0;        // n(n-1)/2
  long long to_boundary_count = 0;  // 2 floor(n/2)
};
GeometryFacts geometry_facts(int n);

/// dim Z_d(p) = d(2n-d+1)/2 for 1 <= d <= n-1; the whole Grassmannian
/// (dimension n(n+1)/2) for d >= n.
long long dim_osculating_locus(int n, int d);

/// Multiplicity of Z_k along Z_i: k - i + 1, for 0 <= i < k.
long long osculating_multiplicity(int k, int i);

/// dim M_{0,k}(LG(n,2n), d) = n(n+1)/2 + (n+1)d + k - 3.
long long dim_kontsevich(int n, int d, int k);

/// Dimension used alongside it: the Hilbert scheme of the degree-n rational
/// curves has dimension 3n(n+1)/2 - 3.
long long dim_hilbert_curves(int n);

Integer binomial(int n, int k);

/// r_k = C(n,k)^2 - C(n,k-1) C(n,k+1), for 1 <= k <= n-1.
Integer section_dimension_rk(int n, int k);

/// TO_n classification data. These values restate the orthogonal-side
/// theorems (no TO_n cone model exists here), hence the provenance tag.
ClassificationReport classify_to(int n);

}  // namespace bircones

#endif
