#ifndef BIRCONES_TL_CONES_HPP
#define BIRCONES_TL_CONES_HPP

#include <string>
#include <vector>

#include "bircones/cone.hpp"
#include "bircones/report.hpp"
#include "bircones/tl_picard.hpp"

namespace bircones {

/// Eff(TL_n) = cone over the 2n boundary divisor classes. All generators are
/// extremal.
Cone effective_cone(int n);

/// Nef(TL_n) = cone over the nef generators N_{p,q}, 0 <= p,q <= n-1,
/// p+q <= n; it has (n^2+3n-2)/2 extremal rays and equals dual(mori_cone(n)).
Cone nef_cone(int n);

/// NE(TL_n) in curve (pairing) coordinates: cone over the 3n-2 classes
/// C_l, C_j^+, C_j^-.
Cone mori_cone(int n);

/// Mov_1(TL_n) = dual of the effective cone, computed in curve coordinates;
/// its n^2 extremal rays are the primitive W_{p,q}.
Cone moving_curve_cone(int n);

/// Cox degree list Deg_n of length 4n-2: each color degree B_1..B_{n-1}
/// twice, then D_{n-1}^+, D_{n-1}^-, then the exceptional degrees once each.
struct GradedDegreeList {
  int n = 0;
  std::vector<RationalVector> vectors;
};
GradedDegreeList degree_list(int n);

/// Mov(TL_n) = intersection over the degree list of the drop-one cones
/// Cone(v_j : j != i).
Cone movable_cone(int n);

/// Pic-grading of the Cox ring generators: one column per canonical boundary
/// section, and the degree of B_k repeated r_k = C(n,k)^2 - C(n,k-1)C(n,k+1)
/// times. The matrix has 2n-1 rows.
struct CoxData {
  int n = 0;
  RationalMatrix grading;                 // (2n-1) x generator_count
  long long generator_count = 0;
  std::vector<std::string> column_labels;
  std::vector<long long> color_section_dims;  // r_1 ... r_{n-1}
};
CoxData cox_data(int n);

ClassificationReport classify_tl(int n);

/// Number of extremal rays predicted for Nef(TL_n).
long long nef_ray_count_formula(int n);  // (n^2+3n-2)/2

/// Cross-validation helpers used by the self test and the test suites.
bool nef_mori_duality_holds(int n);
bool moving_eff_duality_holds(int n);

}  // namespace bircones

#endif
