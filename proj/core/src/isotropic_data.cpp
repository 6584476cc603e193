#include "bircones/isotropic_data.hpp"

namespace bircones {

GeometryFacts geometry_facts(int n) {
  if (n < 1) throw std::invalid_argument("geometry_facts: n >= 1 required");
  GeometryFacts f;
  f.n = n;
  f.dim_lg = static_cast<long long>(n) * (n + 1) / 2;
  f.fano_index_lg = n + 1;
  f.dim_og_plus = static_cast<long long>(n) * (n - 1) / 2;
  f.to_boundary_count = 2 * (n / 2);
  return f;
}

long long dim_osculating_locus(int n, int d) {
  if (n < 1) throw std::invalid_argument("dim_osculating_locus: n >= 1 required");
  if (d < 1) throw std::invalid_argument("dim_osculating_locus: d >= 1 required");
  if (d >= n) return geometry_facts(n).dim_lg;
  return static_cast<long long>(d) * (2 * n - d + 1) / 2;
}

long long osculating_multiplicity(int k, int i) {
  if (i < 0 || i >= k) throw std::invalid_argument("osculating_multiplicity: need 0 <= i < k");
  return static_cast<long long>(k) - i + 1;
}

long long dim_kontsevich(int n, int d, int k) {
  if (n < 2 || d < 1 || k < 0) throw std::invalid_argument("dim_kontsevich: bad arguments");
  return static_cast<long long>(n) * (n + 1) / 2 + static_cast<long long>(n + 1) * d + k - 3;
}

long long dim_hilbert_curves(int n) {
  if (n < 2) throw std::invalid_argument("dim_hilbert_curves: n >= 2 required");
  return 3LL * n * (n + 1) / 2 - 3;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

Integer section_dimension_rk(int n, int k) {
  if (n < 2) throw std::invalid_argument("section_dimension_rk: n >= 2 required");
  if (k < 1 || k > n - 1) throw std::invalid_argument("section_dimension_rk: need 1 <= k <= n-1");
  return binomial(n, k) * binomial(n, k) - binomial(n, k - 1) * binomial(n, k + 1);
}

ClassificationReport classify_to(int n) {
  if (n < 2) throw std::invalid_argument("classify_to: n >= 2 required");
  ClassificationReport r;
  r.n = n;
  r.is_weak_fano = true;
  r.is_fano = n <= 5;
  r.eff_ray_count = static_cast<int>(geometry_facts(n).to_boundary_count);
  r.provenance = "asserted-by-theorem";
  return r;
}

}  // namespace bircones
