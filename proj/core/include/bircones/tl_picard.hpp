#ifndef BIRCONES_TL_PICARD_HPP
#define BIRCONES_TL_PICARD_HPP

#include <vector>

#include "bircones/rational.hpp"

namespace bircones {

enum class Side { plus, minus };

/// Divisor class on TL_n, written in the free basis
///   (H; D_0^+, ..., D_{n-2}^+; D_0^-, ..., D_{n-2}^-)
/// of the Picard lattice, so coords has length 2n-1.
struct DivisorClass {
  int n = 0;
  RationalVector coords;
};

/// Curve class on TL_n in pairing coordinates: entry i is the intersection
/// number with the i-th Picard basis divisor, in the same order as
/// DivisorClass. Pairings with the dependent boundary divisors D_{n-1}^+/-
/// are derived through the linear equivalence relations.
struct CurveClass {
  int n = 0;
  RationalVector pairings;
};

/// Reporting bases for curve classes.
///  - pairing: the raw intersection vector (internal canonical form).
///  - epsilon: basis (l, e_0^+, .., e_{n-2}^+, e_0^-, ..) with <l,H>=1,
///    <l,D_i^+->=0, <e_j^s, D_i^s> = -delta_ij, <e_j^s, H>=0. This is the
///    convention that reproduces the printed ray lists for n = 2, 3.
///  - literal: basis (l, C_1^+, .., C_{n-1}^+, C_1^-, ..) where the e's are
///    literally the zeta curve classes. Kept for reference; not the default.
enum class CurveBasis { pairing, epsilon, literal };

enum class MoriKind { gamma, zeta_plus, zeta_minus };

int picard_rank(int n);  // 2n - 1

/// D_i^side as a divisor class: the basis vector for i <= n-2, and
/// H - sum_{j=0}^{n-2} (n-j) D_j^side for i = n-1.
DivisorClass boundary_divisor(int n, Side side, int i);

/// Color class B_k = H - sum_{i<=n-k-1}(n-k-i) D_i^+ - sum_{i<=k-1}(k-i) D_i^-
/// for 1 <= k <= n-1; B_0 = D_{n-1}^+ and B_n = D_{n-1}^-.
DivisorClass color_class(int n, int k);

/// Nef generator N_{p,q} = H - sum_{i<p}(p-i) D_i^+ - sum_{i<q}(q-i) D_i^-,
/// for 0 <= p,q <= n-1 with p+q <= n. Empty sums are zero.
DivisorClass nef_generator(int n, int p, int q);

/// K = -(n+1) H + sum_{i=0}^{n-2} ((n+1-i)(n-i)/2 - 1)(D_i^+ + D_i^-).
DivisorClass canonical_class(int n);

/// Checks the alternative expression
///   K = - sum_{m=1}^{n-1} B_m - sum_{i=0}^{n-1} (D_i^+ + D_i^-)
/// against canonical_class(n) as vectors.
bool alt_canonical_check(int n);

Rational pair(const DivisorClass& d, const CurveClass& c);

/// T-invariant curve classes generating the Mori cone, filled from the
/// intersection table:
///   C_l     (gamma, 0 <= l <= n-1):  H=1, D_i^+ = d_{i,n-l-1}-d_{i,n-l},
///                                    D_i^- = d_{i,l}-d_{i,l+1}
///   C_j^+/- (zeta,  1 <= j <= n-1):  H=0, same-side D_i = -d_{i,j-1}+2d_{ij}
///                                    -d_{i,j+1}, other side 0.
CurveClass mori_generator(int n, MoriKind kind, int index);

/// Pairing of a curve class with the dependent divisor D_{n-1}^side, derived
/// through the boundary relation.
Rational derived_boundary_pairing(const CurveClass& c, Side side);

/// Integral moving-curve generator W_{p,q}, 0 <= p,q <= n-1: the class with
/// H.W = lcm(n-p, n-q), D_p^+.W = lcm/(n-p), D_q^-.W = lcm/(n-q) and all
/// other boundary pairings zero. The i = n-1 pairings are realized through
/// the boundary relations and verified on construction.
CurveClass moving_curve_ray(int n, int p, int q);

/// Effective expansion data of W_{p,q}:
///   W_{p,q} = a * (C_0 + ... + C_{n-1-p}) + sum_j lambda_{j-1} C_j^-
/// with a = lcm/(n-p), b = lcm/(n-q) and lambda given by
///   lambda_{-1} = 0, lambda_0 = a - b*d_{q,0},
///   lambda_r = 2 lambda_{r-1} - lambda_{r-2} - a*d_{r,n-p} - b*d_{r,q}.
struct MovingCurveExpansion {
  Integer a;
  Integer b;
  std::vector<Integer> lambda;  // lambda_0 ... lambda_{n-2}
};
MovingCurveExpansion moving_curve_expansion(int n, int p, int q);

/// Rebuilds the pairing vector of the expansion above through the
/// intersection table; equals moving_curve_ray(n,p,q).pairings when the
/// recursion is consistent.
CurveClass expansion_pairing_vector(int n, int p, int q);

/// Mirror expansion on the + side:
///   W_{p,q} = b * (C_q + ... + C_{n-1}) + sum_j lambda'_{j-1} C_j^+
/// with lambda' the recursion coefficients for the swapped pair (q,p).
CurveClass symmetric_expansion_pairing_vector(int n, int p, int q);

RationalVector curve_to_basis(const CurveClass& c, CurveBasis basis);
CurveClass curve_from_basis(int n, const RationalVector& coords, CurveBasis basis);

}  // namespace bircones

#endif
