#include "bircones/tl_cones.hpp"

#include "bircones/isotropic_data.hpp"

namespace bircones {

namespace {

void require_n(int n) {
  if (n < 2) throw std::invalid_argument("TL_n requires n >= 2");
}

}  // namespace

long long nef_ray_count_formula(int n) {
  require_n(n);
  return (static_cast<long long>(n) * n + 3 * n - 2) / 2;
}

Cone effective_cone(int n) {
  require_n(n);
  std::vector<RationalVector> gens;
  for (Side s : {Side::plus, Side::minus})
    for (int i = 0; i <= n - 1; ++i) gens.push_back(boundary_divisor(n, s, i).coords);
  return Cone(2 * n - 1, gens);
}

Cone nef_cone(int n) {
  require_n(n);
  std::vector<RationalVector> gens;
  for (int p = 0; p <= n - 1; ++p)
    for (int q = 0; q <= n - 1 && p + q <= n; ++q) gens.push_back(nef_generator(n, p, q).coords);
  return Cone(2 * n - 1, gens);
}

Cone mori_cone(int n) {
  require_n(n);
  std::vector<RationalVector> gens;
  for (int l = 0; l <= n - 1; ++l) gens.push_back(mori_generator(n, MoriKind::gamma, l).pairings);
  for (int j = 1; j <= n - 1; ++j) {
    gens.push_back(mori_generator(n, MoriKind::zeta_plus, j).pairings);
    gens.push_back(mori_generator(n, MoriKind::zeta_minus, j).pairings);
  }
  return Cone(2 * n - 1, gens);
}

Cone moving_curve_cone(int n) {
  require_n(n);
  return dual(effective_cone(n));
}

GradedDegreeList degree_list(int n) {
  require_n(n);
  GradedDegreeList d;
  d.n = n;
  for (int k = 1; k <= n - 1; ++k) {
    d.vectors.push_back(color_class(n, k).coords);
    d.vectors.push_back(color_class(n, k).coords);
  }
  d.vectors.push_back(boundary_divisor(n, Side::plus, n - 1).coords);
  d.vectors.push_back(boundary_divisor(n, Side::minus, n - 1).coords);
  for (int i = 0; i <= n - 2; ++i) d.vectors.push_back(boundary_divisor(n, Side::plus, i).coords);
  for (int i = 0; i <= n - 2; ++i) d.vectors.push_back(boundary_divisor(n, Side::minus, i).coords);
  return d;
}

Cone movable_cone(int n) {
  require_n(n);
  GradedDegreeList deg = degree_list(n);
  const int dim = 2 * n - 1;
  // Dropping one copy of a repeated degree leaves the cone of all degrees, so
  // only distinct drop-one cones contribute to the intersection.
  std::vector<RationalVector> dropped_already;
  std::vector<Cone> pieces;
  for (std::size_t i = 0; i < deg.vectors.size(); ++i) {
    std::size_t copies = 0;
    for (const auto& v : deg.vectors)
      if (same_vector(v, deg.vectors[i])) ++copies;
    if (copies > 1) continue;
    std::vector<RationalVector> rest;
    for (std::size_t j = 0; j < deg.vectors.size(); ++j)
      if (j != i) rest.push_back(deg.vectors[j]);
    pieces.emplace_back(dim, rest);
  }
  if (pieces.empty()) pieces.emplace_back(dim, deg.vectors);
  return intersect_all(pieces);
}

CoxData cox_data(int n) {
  require_n(n);
  CoxData out;
  out.n = n;
  std::vector<RationalVector> cols;
  std::vector<std::string> labels;
  for (Side s : {Side::plus, Side::minus}) {
    const char sc = s == Side::plus ? '+' : '-';
    for (int i = 0; i <= n - 1; ++i) {
      cols.push_back(boundary_divisor(n, s, i).coords);
      labels.push_back("s_D" + std::to_string(i) + sc);
    }
  }
  for (int k = 1; k <= n - 1; ++k) {
    const Integer rk = section_dimension_rk(n, k);
    out.color_section_dims.push_back(static_cast<long long>(rk));
    for (Integer t = 0; t < rk; ++t) {
      cols.push_back(color_class(n, k).coords);
      labels.push_back("s_B" + std::to_string(k) + "," + t.str());
    }
  }
  out.generator_count = static_cast<long long>(cols.size());
  out.grading = RationalMatrix(2 * n - 1, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    out.grading.col(static_cast<Eigen::Index>(j)) = cols[j];
  out.column_labels = std::move(labels);
  return out;
}

ClassificationReport classify_tl(int n) {
  require_n(n);
  Cone nef = nef_cone(n);
  RationalVector minus_k = -canonical_class(n).coords;
  ClassificationReport r;
  r.n = n;
  r.is_weak_fano = nef.contains(minus_k);
  r.is_fano = nef.interior_contains(minus_k);
  r.nef_ray_count = static_cast<int>(extremal_rays(nef).rays.size());
  r.eff_ray_count = static_cast<int>(extremal_rays(effective_cone(n)).rays.size());
  r.cox_generator_count = cox_data(n).generator_count;
  r.aut_dimension = static_cast<long long>(n) * n;
  r.aut_group = "(GL_n/{+-1}) x| S_2";
  r.provenance = "computed";
  return r;
}

bool nef_mori_duality_holds(int n) {
  return equal(nef_cone(n), dual(mori_cone(n)));
}

bool moving_eff_duality_holds(int n) {
  std::vector<RationalVector> ws;
  for (int p = 0; p <= n - 1; ++p)
    for (int q = 0; q <= n - 1; ++q) ws.push_back(moving_curve_ray(n, p, q).pairings);
  Cone from_table(2 * n - 1, ws);
  return equal(moving_curve_cone(n), from_table);
}

}  // namespace bircones
