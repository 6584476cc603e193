#ifndef BIRCONES_RATIONAL_HPP
#define BIRCONES_RATIONAL_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace bircones {

using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Column vector / dense matrix of exact rationals. Entries are kept in
/// canonical form (reduced fraction, positive denominator) by the GMP
/// backend, so the representation invariants hold by construction.
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Thrown when a computation is asked to exceed its documented size bound.
class ResourceBoundError : public std::runtime_error {
 public:
  explicit ResourceBoundError(const std::string& what) : std::runtime_error(what) {}
};

RationalVector make_vector(std::initializer_list<Rational> entries);

/// Unique integer vector spanning the same line as `v`, with coprime entries
/// and positive first nonzero entry. Note the sign convention normalizes the
/// line, not the ray: primitive((-1/2, 1/2)) = (1, -1).
RationalVector primitive(const RationalVector& v);

/// Unique integer vector on the ray R_{>0} v with coprime entries. Preserves
/// direction; this is the normal form used for cone generators.
RationalVector ray_primitive(const RationalVector& v);

bool is_zero(const RationalVector& v);

/// Strict lexicographic order on vectors of equal length.
bool lex_less(const RationalVector& a, const RationalVector& b);

void sort_vectors(std::vector<RationalVector>& vs);

/// Deduplicates a list of vectors as rays: each entry is replaced by its
/// ray_primitive form, exact duplicates are removed, order is lexicographic.
std::vector<RationalVector> dedup_rays(const std::vector<RationalVector>& vs);

bool same_vector(const RationalVector& a, const RationalVector& b);

/// Set equality of two ray lists after ray_primitive normalization.
bool same_ray_set(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b);

/// "p/q" for genuine fractions, "p" for integers.
std::string to_string(const Rational& q);
std::string to_string(const RationalVector& v);

/// Parses "p" or "p/q" with optional sign; throws std::invalid_argument on
/// malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

}  // namespace bircones

#endif
