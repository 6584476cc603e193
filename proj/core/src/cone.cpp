#include "bircones/cone.hpp"

#include <algorithm>

#include "bircones/dd_detail.hpp"
#include "bircones/linalg.hpp"

namespace bircones {

std::vector<RationalVector> GeneratorDescription::all_generators() const {
  std::vector<RationalVector> out = rays;
  for (const auto& l : lineality) {
    out.push_back(ray_primitive(l));
    out.push_back(ray_primitive(RationalVector(-l)));
  }
  return out;
}

namespace dd {

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool DDState::adjacent(const RationalVector& p, const RationalVector& q) const {
  const int target = dim - static_cast<int>(lineality.size()) - 2;
  if (target < 0) return false;
  std::vector<RationalVector> common;
  for (const auto& row : inserted)
    if (dot(row, p) == 0 && dot(row, q) == 0) common.push_back(row);
  if (static_cast<int>(common.size()) < target) return false;
  if (target == 0) return true;
  return rank(stack_rows(common, dim)) == target;
}

// Removes the lineality component along h: afterwards every carried lineality
// vector and every ray is orthogonal to h. Returns the freed direction l0,
// sign-normalized so that dot(h, l0) > 0; the caller appends it as a ray.
RationalVector DDState::cut_lineality(const RationalVector& h) {
  std::size_t pivot = lineality.size();
  for (std::size_t i = 0; i < lineality.size(); ++i) {
    if (dot(h, lineality[i]) != 0) { pivot = i; break; }
  }
  if (pivot == lineality.size()) throw std::logic_error("cut_lineality: h orthogonal to lineality");
  RationalVector l0 = lineality[pivot];
  lineality.erase(lineality.begin() + static_cast<std::ptrdiff_t>(pivot));
  Rational hl0 = dot(h, l0);
  if (hl0 < 0) { l0 = -l0; hl0 = -hl0; }
  for (auto& l : lineality) {
    const Rational c = dot(h, l) / hl0;
    if (c != 0) l = ray_primitive(RationalVector(l - c * l0));
  }
  for (auto& r : rays) {
    const Rational c = dot(h, r) / hl0;
    if (c != 0) r = ray_primitive(RationalVector(r - c * l0));
  }
  return ray_primitive(l0);
}

RationalVector DDState::interior_point() const {
  RationalVector w = RationalVector::Zero(dim);
  for (const auto& r : rays) w += r;
  return w;
}

namespace {

struct RaySplit {
  std::vector<RationalVector> pos, zero, neg, combos;
};

RaySplit split_rays(const DDState& state, const RationalVector& h) {
  RaySplit s;
  for (const auto& r : state.rays) {
    const Rational d = dot(h, r);
    if (d > 0) s.pos.push_back(r);
    else if (d == 0) s.zero.push_back(r);
    else s.neg.push_back(r);
  }
  for (const auto& p : s.pos) {
    const Rational hp = dot(h, p);
    for (const auto& m : s.neg) {
      if (!state.adjacent(p, m)) continue;
      const Rational hm = dot(h, m);
      s.combos.push_back(ray_primitive(RationalVector(hp * m - hm * p)));
    }
  }
  return s;
}

}  // namespace

bool insert_halfspace(DDState& state, const RationalVector& h) {
  for (const auto& l : state.lineality) {
    if (dot(h, l) != 0) {
      RationalVector l0 = state.cut_lineality(h);
      state.rays.push_back(std::move(l0));
      state.inserted.push_back(h);
      return true;
    }
  }
  RaySplit s = split_rays(state, h);
  if (s.neg.empty()) return false;  // already inside the halfspace
  state.rays = std::move(s.pos);
  state.rays.insert(state.rays.end(), s.zero.begin(), s.zero.end());
  state.rays.insert(state.rays.end(), s.combos.begin(), s.combos.end());
  state.inserted.push_back(h);
  return true;
}

bool split_by_hyperplane(DDState& cell, const RationalVector& h, DDState& other) {
  for (const auto& l : cell.lineality) {
    if (dot(h, l) != 0) {
      other = cell;
      RationalVector l0 = cell.cut_lineality(h);
      cell.rays.push_back(std::move(l0));
      cell.inserted.push_back(h);
      RationalVector mh = -h;
      RationalVector ml0 = other.cut_lineality(mh);
      other.rays.push_back(std::move(ml0));
      other.inserted.push_back(std::move(mh));
      return true;
    }
  }
  RaySplit s = split_rays(cell, h);
  if (s.pos.empty() || s.neg.empty()) return false;  // hyperplane does not cut the cell
  other = cell;
  other.rays = std::move(s.neg);
  other.rays.insert(other.rays.end(), s.zero.begin(), s.zero.end());
  other.rays.insert(other.rays.end(), s.combos.begin(), s.combos.end());
  other.inserted.push_back(RationalVector(-h));
  cell.rays = std::move(s.pos);
  cell.rays.insert(cell.rays.end(), s.zero.begin(), s.zero.end());
  cell.rays.insert(cell.rays.end(), s.combos.begin(), s.combos.end());
  cell.inserted.push_back(h);
  return true;
}

DDState full_space(int dim) {
  DDState s;
  s.dim = dim;
  for (int i = 0; i < dim; ++i) {
    RationalVector e = RationalVector::Zero(dim);
    e[i] = 1;
    s.lineality.push_back(e);
  }
  return s;
}

}  // namespace dd

namespace {

// Deterministic canonical basis of a subspace: reduced row echelon rows,
// each made primitive.
std::vector<RationalVector> canonical_subspace_basis(const std::vector<RationalVector>& basis,
                                                     int dim) {
  if (basis.empty()) return {};
  RationalMatrix m = stack_rows(basis, dim);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    m.row(r) /= m(r, c);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      m.row(i) -= m(i, c) * m.row(r);
    }
    ++r;
  }
  std::vector<RationalVector> out;
  for (Eigen::Index i = 0; i < r; ++i)
    out.push_back(ray_primitive(RationalVector(m.row(i).transpose())));
  return out;
}

}  // namespace

GeneratorDescription cone_from_halfspaces(int dim,
                                          const std::vector<RationalVector>& halfspaces,
                                          const std::vector<RationalVector>& equations) {
  if (dim <= 0) throw std::invalid_argument("cone_from_halfspaces: ambient dimension must be positive");
  std::vector<RationalVector> eqs, rows;
  for (const auto& e : equations) {
    if (e.size() != dim) throw std::invalid_argument("cone_from_halfspaces: dimension mismatch");
    if (!is_zero(e)) eqs.push_back(primitive(e));
  }
  for (const auto& h : halfspaces) {
    if (h.size() != dim) throw std::invalid_argument("cone_from_halfspaces: dimension mismatch");
    if (!is_zero(h)) rows.push_back(ray_primitive(h));
  }
  sort_vectors(eqs);
  eqs.erase(std::unique(eqs.begin(), eqs.end(), same_vector), eqs.end());
  sort_vectors(rows);
  rows.erase(std::unique(rows.begin(), rows.end(), same_vector), rows.end());

  dd::DDState s = dd::full_space(dim);
  for (const auto& e : eqs) {
    dd::insert_halfspace(s, e);
    dd::insert_halfspace(s, RationalVector(-e));
  }
  for (const auto& h : rows) dd::insert_halfspace(s, h);

  GeneratorDescription out;
  out.rays = s.rays;
  sort_vectors(out.rays);
  out.lineality = canonical_subspace_basis(s.lineality, dim);
  return out;
}

Cone::Cone(int ambient_dim, const std::vector<RationalVector>& generators)
    : ambient_dim_(ambient_dim) {
  if (ambient_dim <= 0) throw std::invalid_argument("Cone: ambient dimension must be positive");
  for (const auto& g : generators) {
    if (g.size() != ambient_dim) throw std::invalid_argument("Cone: generator dimension mismatch");
    if (is_zero(g)) throw std::invalid_argument("Cone: zero generator");
  }
  generators_ = dedup_rays(generators);
}

Cone Cone::positive_orthant(int dim) {
  std::vector<RationalVector> gens;
  for (int i = 0; i < dim; ++i) {
    RationalVector e = RationalVector::Zero(dim);
    e[i] = 1;
    gens.push_back(e);
  }
  return Cone(dim, gens);
}

const HRep& Cone::hrep() const {
  if (!hrep_) {
    auto d = cone_from_halfspaces(ambient_dim_, generators_);
    auto h = std::make_shared<HRep>();
    h->facets = d.rays;
    h->equations = d.lineality;
    hrep_ = h;
  }
  return *hrep_;
}

bool Cone::contains(const RationalVector& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("Cone::contains: dimension mismatch");
  const HRep& h = hrep();
  for (const auto& e : h.equations)
    if (dd::dot(e, v) != 0) return false;
  for (const auto& f : h.facets)
    if (dd::dot(f, v) < 0) return false;
  return true;
}

bool Cone::interior_contains(const RationalVector& v, bool relative) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("Cone::interior_contains: dimension mismatch");
  const HRep& h = hrep();
  if (!relative && !h.equations.empty()) return false;  // no topological interior
  for (const auto& e : h.equations)
    if (dd::dot(e, v) != 0) return false;
  for (const auto& f : h.facets)
    if (dd::dot(f, v) <= 0) return false;
  return true;
}

bool Cone::is_pointed() const {
  const HRep& h = hrep();
  std::vector<RationalVector> rows = h.facets;
  rows.insert(rows.end(), h.equations.begin(), h.equations.end());
  if (rows.empty()) return generators_.empty();
  return rank(stack_rows(rows, ambient_dim_)) == ambient_dim_;
}

int Cone::dimension() const {
  return ambient_dim_ - static_cast<int>(hrep().equations.size());
}

Cone dual(const Cone& c) {
  auto d = cone_from_halfspaces(c.ambient_dim(), c.generators());
  return Cone(c.ambient_dim(), d.all_generators());
}

ExtremalRays extremal_rays(const Cone& c) {
  const HRep& h = c.hrep();
  auto d = cone_from_halfspaces(c.ambient_dim(), h.facets, h.equations);
  return {d.rays, d.lineality, d.pointed()};
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: dimension mismatch");
  return intersect_all({a, b});
}

Cone intersect_all(const std::vector<Cone>& cones) {
  if (cones.empty()) throw std::invalid_argument("intersect_all: empty input");
  const int dim = cones.front().ambient_dim();
  std::vector<RationalVector> facets, eqs;
  for (const auto& c : cones) {
    if (c.ambient_dim() != dim) throw std::invalid_argument("intersect_all: dimension mismatch");
    const HRep& h = c.hrep();
    facets.insert(facets.end(), h.facets.begin(), h.facets.end());
    eqs.insert(eqs.end(), h.equations.begin(), h.equations.end());
  }
  auto d = cone_from_halfspaces(dim, facets, eqs);
  return Cone(dim, d.all_generators());
}

bool equal(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("equal: dimension mismatch");
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  for (const auto& g : b.generators())
    if (!a.contains(g)) return false;
  return true;
}

}  // namespace bircones
