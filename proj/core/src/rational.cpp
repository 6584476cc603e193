#include "bircones/rational.hpp"

#include <algorithm>

namespace bircones {

RationalVector make_vector(std::initializer_list<Rational> entries) {
  RationalVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& e : entries) v[i++] = e;
  return v;
}

bool is_zero(const RationalVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

namespace {

// Scales v by the positive rational that clears denominators and divides out
// the common content, leaving coprime integer entries on the same ray.
RationalVector scale_to_coprime(const RationalVector& v) {
  Integer den_lcm = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    den_lcm = lcm(den_lcm, denominator(v[i]));
  Integer num_gcd = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    num_gcd = gcd(num_gcd, Integer(numerator(v[i]) * (den_lcm / denominator(v[i]))));
  RationalVector out(v.size());
  Rational factor(den_lcm, num_gcd);
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i] * factor;
  return out;
}

}  // namespace

RationalVector ray_primitive(const RationalVector& v) {
  if (is_zero(v)) throw std::invalid_argument("zero vector has no primitive representative");
  return scale_to_coprime(v);
}

RationalVector primitive(const RationalVector& v) {
  RationalVector out = ray_primitive(v);
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out[i] == 0) continue;
    if (out[i] < 0) out = -out;
    break;
  }
  return out;
}

bool lex_less(const RationalVector& a, const RationalVector& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return a.size() < b.size();
}

void sort_vectors(std::vector<RationalVector>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
}

bool same_vector(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::vector<RationalVector> dedup_rays(const std::vector<RationalVector>& vs) {
  std::vector<RationalVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(ray_primitive(v));
  sort_vectors(out);
  out.erase(std::unique(out.begin(), out.end(), same_vector), out.end());
  return out;
}

bool same_ray_set(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b) {
  auto ra = dedup_rays(a);
  auto rb = dedup_rays(b);
  if (ra.size() != rb.size()) return false;
  for (std::size_t i = 0; i < ra.size(); ++i)
    if (!same_vector(ra[i], rb[i])) return false;
  return true;
}

std::string to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

std::string to_string(const RationalVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

}  // namespace bircones
