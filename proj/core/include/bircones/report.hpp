#ifndef BIRCONES_REPORT_HPP
#define BIRCONES_REPORT_HPP

#include <optional>
#include <string>

namespace bircones {

/// Fano-type classification summary shared by the TL, pointed-conic and TO
/// families. Fields that a family does not define stay unset.
struct ClassificationReport {
  int n = 0;
  bool is_fano = false;
  bool is_weak_fano = false;
  std::optional<int> nef_ray_count;
  std::optional<int> eff_ray_count;
  std::optional<long long> cox_generator_count;
  std::optional<long long> aut_dimension;
  std::optional<int> fano_index;
  std::string aut_group;    // e.g. "PSp(2n)"
  std::string provenance;   // "computed" or "asserted-by-theorem"
};

}  // namespace bircones

#endif
