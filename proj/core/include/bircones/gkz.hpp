#ifndef BIRCONES_GKZ_HPP
#define BIRCONES_GKZ_HPP

#include <vector>

#include "bircones/rational.hpp"

namespace bircones {

/// Finite configuration of rational vectors, stored primitive (ray
/// normalization) and deduplicated.
struct VectorConfiguration {
  int ambient_dim = 0;
  std::vector<RationalVector> vectors;

  static VectorConfiguration from_vectors(int dim, const std::vector<RationalVector>& vs);
  int span_dimension() const;
  bool spans() const { return span_dimension() == ambient_dim; }
};

/// All distinct hyperplanes spanned by (d-1)-element linearly independent
/// subsets of the configuration, as primitive sign-normalized normals (first
/// nonzero entry positive), sorted lexicographically. Errors when fewer than
/// d-1 vectors are available.
std::vector<RationalVector> wall_hyperplanes(const VectorConfiguration& cfg);

struct Chamber {
  RationalVector witness;       // interior rational point of the cell
  std::vector<int> wall_signs;  // +1 / -1 per wall, aligned with `walls`
  long long gkz_class = -1;     // secondary-fan chamber id (with merge enabled)
};

struct ChamberCountOptions {
  bool keep_certificates = false;
  bool merge_secondary_fan = true;
  std::vector<int> wall_order;  // permutation of the wall list, for order checks
};

struct ChamberCount {
  /// Full-dimensional cells of the wall-hyperplane arrangement restricted to
  /// cone(cfg).
  long long cells = 0;
  /// Maximal chambers of the GKZ / secondary-fan decomposition of cone(cfg):
  /// arrangement cells merged by the set of full-dimensional basis cones
  /// containing them. -1 when the merge was not requested.
  long long gkz_chambers = -1;
  std::vector<RationalVector> walls;
  std::vector<RationalVector> support_facets;
  std::vector<Chamber> chambers;  // populated when keep_certificates
};

/// Incremental hyperplane insertion over exact double-description cells, each
/// cell carrying a rational interior witness. Both counts are deterministic
/// functions of the configuration alone (any wall insertion order gives the
/// same result). Errors when cfg does not span (message carries the span
/// dimension).
ChamberCount chamber_count(const VectorConfiguration& cfg, const ChamberCountOptions& opts = {});

/// Secondary-fan chamber count for the distinct B-stable degree configuration
/// of TL_n (boundary divisor classes plus colors). Documented practical bound
/// is n <= 4; larger n raises ResourceBoundError rather than attempting the
/// computation.
long long chamber_count_tl(int n);
constexpr int kChamberCountTlBound = 4;

/// The configuration behind chamber_count_tl.
VectorConfiguration tl_degree_configuration(int n);

}  // namespace bircones

#endif
