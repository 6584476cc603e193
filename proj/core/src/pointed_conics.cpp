#include "bircones/pointed_conics.hpp"

#include <numeric>

namespace bircones {

namespace {

void require_n(int n) {
  if (n < 2) throw std::invalid_argument("pointed conics require n >= 2");
}

ConicDivClass from3(Rational a, Rational b, Rational c) {
  return {make_vector({std::move(a), std::move(b), std::move(c)})};
}

}  // namespace

ConicDivClass conic_h1() { return from3(1, 0, 0); }
ConicDivClass conic_hsigma2() { return from3(0, 1, 0); }
ConicDivClass conic_delta() { return from3(0, 0, 1); }
ConicDivClass tangency_class() { return from3(0, 1, Rational(1, 2)); }
ConicDivClass unbalanced_class() { return from3(0, 1, Rational(-1, 2)); }
ConicDivClass psi1_class() { return from3(-1, Rational(1, 2), Rational(1, 4)); }

Cone eff_cone_conics(int n) {
  require_n(n);
  return Cone(3, {conic_h1().coords, conic_delta().coords, unbalanced_class().coords});
}

Cone nef_cone_conics(int n) {
  require_n(n);
  return Cone(3, {conic_h1().coords, conic_hsigma2().coords, tangency_class().coords});
}

ConicDivClass anticanonical_conics(int n) {
  require_n(n);
  if (n == 2) return from3(1, Rational(5, 2), Rational(3, 4));
  return from3(1, Rational(n + 2, 2), Rational(6 - n, 4));
}

ConicDivClass anticanonical_conics_t_form(int n) {
  require_n(n);
  RationalVector v;
  if (n == 2)
    v = conic_h1().coords + conic_hsigma2().coords + Rational(3, 2) * tangency_class().coords;
  else
    v = conic_h1().coords + Rational(n - 2) * conic_hsigma2().coords +
        Rational(6 - n, 2) * tangency_class().coords;
  return {v};
}

BlowupClass restrict_to_blowup(const ConicDivClass& c) {
  if (c.coords.size() != 3) throw std::invalid_argument("restrict_to_blowup: bad class length");
  RationalVector h1 = make_vector({1, 0, 0});
  RationalVector hs = make_vector({1, -1, -1});
  RationalVector de = make_vector({2, -2, -2});
  return {RationalVector(c.coords[0] * h1 + c.coords[1] * hs + c.coords[2] * de)};
}

ClassificationReport classify_conics(int n) {
  require_n(n);
  Cone nef = nef_cone_conics(n);
  RationalVector minus_k = anticanonical_conics(n).coords;
  ClassificationReport r;
  r.n = n;
  r.is_fano = nef.interior_contains(minus_k);
  r.is_weak_fano = nef.contains(minus_k);
  r.nef_ray_count = 3;
  r.eff_ray_count = 3;
  r.aut_group = "PSp(2n)";
  r.provenance = "computed";
  if (r.is_fano) {
    BlowupClass restricted = restrict_to_blowup(anticanonical_conics(n));
    Integer g = 0;
    for (Eigen::Index i = 0; i < 3; ++i) {
      if (denominator(restricted.coords[i]) != 1)
        throw std::logic_error("classify_conics: restricted -K is not integral");
      g = gcd(g, numerator(restricted.coords[i]));
    }
    r.fano_index = static_cast<int>(g);
  }
  return r;
}

}  // namespace bircones
