#include "bircones/gkz.hpp"

#include <algorithm>
#include <map>

#include "bircones/cone.hpp"
#include "bircones/dd_detail.hpp"
#include "bircones/linalg.hpp"
#include "bircones/tl_picard.hpp"

namespace bircones {

VectorConfiguration VectorConfiguration::from_vectors(int dim,
                                                      const std::vector<RationalVector>& vs) {
  if (dim <= 0) throw std::invalid_argument("VectorConfiguration: positive dimension required");
  VectorConfiguration cfg;
  cfg.ambient_dim = dim;
  for (const auto& v : vs) {
    if (v.size() != dim) throw std::invalid_argument("VectorConfiguration: dimension mismatch");
    if (is_zero(v)) throw std::invalid_argument("VectorConfiguration: zero vector");
  }
  cfg.vectors = dedup_rays(vs);
  return cfg;
}

int VectorConfiguration::span_dimension() const {
  if (vectors.empty()) return 0;
  return rank(stack_rows(vectors, ambient_dim));
}

namespace {

// Visits all size-r index subsets of {0..k-1} in lexicographic order.
template <typename F>
void for_each_subset(int k, int r, F&& visit) {
  if (r < 0 || r > k) return;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    visit(idx);
    int pos = r - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == k - r + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < r; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::vector<RationalVector> wall_hyperplanes(const VectorConfiguration& cfg) {
  const int d = cfg.ambient_dim;
  const int k = static_cast<int>(cfg.vectors.size());
  if (k < d - 1) throw std::invalid_argument("wall_hyperplanes: fewer than d-1 vectors");

  std::vector<RationalVector> walls;
  for_each_subset(k, d - 1, [&](const std::vector<int>& idx) {
    std::vector<RationalVector> subset;
    for (int i : idx) subset.push_back(cfg.vectors[static_cast<std::size_t>(i)]);
    RationalMatrix m = stack_rows(subset, d);
    if (rank(m) == d - 1) {
      RationalMatrix ker = kernel_basis(m);
      walls.push_back(primitive(RationalVector(ker.col(0))));
    }
  });
  sort_vectors(walls);
  walls.erase(std::unique(walls.begin(), walls.end(), same_vector), walls.end());
  return walls;
}

ChamberCount chamber_count(const VectorConfiguration& cfg, const ChamberCountOptions& opts) {
  const int d = cfg.ambient_dim;
  const int span = cfg.span_dimension();
  if (span != d)
    throw std::invalid_argument("chamber_count: configuration spans only dimension " +
                                std::to_string(span) + " of " + std::to_string(d));

  ChamberCount out;
  out.walls = wall_hyperplanes(cfg);

  Cone support(d, cfg.vectors);
  const HRep& srep = support.hrep();
  out.support_facets = srep.facets;
  ExtremalRays sup = extremal_rays(support);

  dd::DDState root;
  root.dim = d;
  root.lineality = sup.lineality;
  root.rays = sup.rays;
  root.inserted = srep.facets;

  std::vector<int> order(out.walls.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  if (!opts.wall_order.empty()) {
    if (opts.wall_order.size() != out.walls.size())
      throw std::invalid_argument("chamber_count: wall_order must permute the wall list");
    order = opts.wall_order;
  }

  // Full-dimensional basis cones as inverse matrices: w lies in the cone of
  // the columns of M exactly when all entries of M^{-1} w are nonnegative.
  std::vector<RationalMatrix> basis_inverses;
  if (opts.merge_secondary_fan) {
    const int k = static_cast<int>(cfg.vectors.size());
    for_each_subset(k, d, [&](const std::vector<int>& idx) {
      RationalMatrix m(d, d);
      for (int c = 0; c < d; ++c) m.col(c) = cfg.vectors[static_cast<std::size_t>(idx[c])];
      auto inv = inverse(m);
      if (inv) basis_inverses.push_back(std::move(*inv));
    });
  }

  std::map<std::vector<bool>, long long> classes;
  // Depth-first over the insertion tree keeps memory proportional to the
  // number of walls rather than the number of cells.
  auto finish_cell = [&](const dd::DDState& cell) {
    ++out.cells;
    long long cls = -1;
    if (opts.merge_secondary_fan || opts.keep_certificates) {
      RationalVector w = cell.interior_point();
      if (opts.merge_secondary_fan) {
        std::vector<bool> pattern;
        pattern.reserve(basis_inverses.size());
        for (const auto& inv : basis_inverses) {
          bool inside = true;
          for (Eigen::Index r = 0; r < d && inside; ++r) {
            Rational coeff = 0;
            for (Eigen::Index c = 0; c < d; ++c) coeff += inv(r, c) * w[c];
            if (coeff < 0) inside = false;
          }
          pattern.push_back(inside);
        }
        auto [it, fresh] =
            classes.emplace(std::move(pattern), static_cast<long long>(classes.size()));
        cls = it->second;
      }
      if (opts.keep_certificates) {
        Chamber ch;
        ch.witness = std::move(w);
        for (const auto& wall : out.walls) {
          const Rational s = dd::dot(wall, ch.witness);
          if (s == 0) throw std::logic_error("chamber_count: witness on a wall");
          ch.wall_signs.push_back(s > 0 ? 1 : -1);
        }
        ch.gkz_class = cls;
        out.chambers.push_back(std::move(ch));
      }
    }
  };

  auto descend = [&](auto&& self, dd::DDState cell, std::size_t next) -> void {
    for (std::size_t i = next; i < order.size(); ++i) {
      const RationalVector& h = out.walls[static_cast<std::size_t>(order[i])];
      dd::DDState other;
      if (dd::split_by_hyperplane(cell, h, other)) {
        self(self, std::move(other), i + 1);
      }
    }
    finish_cell(cell);
  };
  descend(descend, std::move(root), 0);

  if (opts.merge_secondary_fan) out.gkz_chambers = static_cast<long long>(classes.size());
  return out;
}

VectorConfiguration tl_degree_configuration(int n) {
  if (n < 2) throw std::invalid_argument("tl_degree_configuration: n >= 2 required");
  std::vector<RationalVector> vs;
  for (Side s : {Side::plus, Side::minus})
    for (int i = 0; i <= n - 1; ++i) vs.push_back(boundary_divisor(n, s, i).coords);
  for (int k = 1; k <= n - 1; ++k) vs.push_back(color_class(n, k).coords);
  return VectorConfiguration::from_vectors(2 * n - 1, vs);
}

long long chamber_count_tl(int n) {
  if (n < 2) throw std::invalid_argument("chamber_count_tl: n >= 2 required");
  if (n > kChamberCountTlBound)
    throw ResourceBoundError("chamber_count_tl: n = " + std::to_string(n) +
                             " exceeds the documented resource bound (n <= " +
                             std::to_string(kChamberCountTlBound) + ")");
  return chamber_count(tl_degree_configuration(n)).gkz_chambers;
}

}  // namespace bircones
