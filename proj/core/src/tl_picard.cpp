#include "bircones/tl_picard.hpp"

#include "bircones/dd_detail.hpp"

namespace bircones {

namespace {

void require_n(int n) {
  if (n < 2) throw std::invalid_argument("TL_n requires n >= 2");
}

int kronecker(int a, int b) { return a == b ? 1 : 0; }

// Index of D_i^side in the coordinate vector; H sits at index 0.
Eigen::Index slot(int n, Side side, int i) {
  return 1 + (side == Side::plus ? 0 : n - 1) + i;
}

}  // namespace

int picard_rank(int n) {
  require_n(n);
  return 2 * n - 1;
}

DivisorClass boundary_divisor(int n, Side side, int i) {
  require_n(n);
  if (i < 0 || i > n - 1) throw std::invalid_argument("boundary_divisor: index out of range");
  RationalVector v = RationalVector::Zero(2 * n - 1);
  if (i <= n - 2) {
    v[slot(n, side, i)] = 1;
  } else {
    v[0] = 1;
    for (int j = 0; j <= n - 2; ++j) v[slot(n, side, j)] = -(n - j);
  }
  return {n, v};
}

DivisorClass color_class(int n, int k) {
  require_n(n);
  if (k < 0 || k > n) throw std::invalid_argument("color_class: index out of range");
  if (k == 0) return boundary_divisor(n, Side::plus, n - 1);
  if (k == n) return boundary_divisor(n, Side::minus, n - 1);
  RationalVector v = RationalVector::Zero(2 * n - 1);
  v[0] = 1;
  for (int i = 0; i <= n - k - 1; ++i) v[slot(n, Side::plus, i)] = -(n - k - i);
  for (int i = 0; i <= k - 1; ++i) v[slot(n, Side::minus, i)] = -(k - i);
  return {n, v};
}

DivisorClass nef_generator(int n, int p, int q) {
  require_n(n);
  if (p < 0 || q < 0 || p > n - 1 || q > n - 1 || p + q > n)
    throw std::invalid_argument("nef_generator: not an N_{p,q} index");
  RationalVector v = RationalVector::Zero(2 * n - 1);
  v[0] = 1;
  for (int i = 0; i <= p - 1; ++i) v[slot(n, Side::plus, i)] = -(p - i);
  for (int i = 0; i <= q - 1; ++i) v[slot(n, Side::minus, i)] = -(q - i);
  return {n, v};
}

DivisorClass canonical_class(int n) {
  require_n(n);
  RationalVector v = RationalVector::Zero(2 * n - 1);
  v[0] = -(n + 1);
  for (int i = 0; i <= n - 2; ++i) {
    Rational c = Rational((n + 1 - i) * (n - i), 2) - 1;
    v[slot(n, Side::plus, i)] = c;
    v[slot(n, Side::minus, i)] = c;
  }
  return {n, v};
}

bool alt_canonical_check(int n) {
  require_n(n);
  RationalVector alt = RationalVector::Zero(2 * n - 1);
  for (int m = 1; m <= n - 1; ++m) alt -= color_class(n, m).coords;
  for (int i = 0; i <= n - 1; ++i) {
    alt -= boundary_divisor(n, Side::plus, i).coords;
    alt -= boundary_divisor(n, Side::minus, i).coords;
  }
  return same_vector(alt, canonical_class(n).coords);
}

Rational pair(const DivisorClass& d, const CurveClass& c) {
  if (d.n != c.n) throw std::invalid_argument("pair: mismatched n");
  return dd::dot(d.coords, c.pairings);
}

CurveClass mori_generator(int n, MoriKind kind, int index) {
  require_n(n);
  RationalVector v = RationalVector::Zero(2 * n - 1);
  switch (kind) {
    case MoriKind::gamma: {
      if (index < 0 || index > n - 1) throw std::invalid_argument("mori_generator: gamma index out of range");
      v[0] = 1;
      for (int i = 0; i <= n - 2; ++i) {
        v[slot(n, Side::plus, i)] = kronecker(i, n - index - 1) - kronecker(i, n - index);
        v[slot(n, Side::minus, i)] = kronecker(i, index) - kronecker(i, index + 1);
      }
      break;
    }
    case MoriKind::zeta_plus:
    case MoriKind::zeta_minus: {
      if (index < 1 || index > n - 1) throw std::invalid_argument("mori_generator: zeta index out of range");
      const Side side = kind == MoriKind::zeta_plus ? Side::plus : Side::minus;
      for (int i = 0; i <= n - 2; ++i)
        v[slot(n, side, i)] =
            -kronecker(i, index - 1) + 2 * kronecker(i, index) - kronecker(i, index + 1);
      break;
    }
  }
  return {n, v};
}

Rational derived_boundary_pairing(const CurveClass& c, Side side) {
  const int n = c.n;
  require_n(n);
  Rational out = c.pairings[0];
  for (int j = 0; j <= n - 2; ++j) out -= Rational(n - j) * c.pairings[slot(n, side, j)];
  return out;
}

CurveClass moving_curve_ray(int n, int p, int q) {
  require_n(n);
  if (p < 0 || p > n - 1 || q < 0 || q > n - 1)
    throw std::invalid_argument("moving_curve_ray: index out of range");
  const Integer wp = n - p, wq = n - q;
  const Integer l = lcm(wp, wq);
  RationalVector v = RationalVector::Zero(2 * n - 1);
  v[0] = Rational(l);
  if (p <= n - 2) v[slot(n, Side::plus, p)] = Rational(l / wp);
  if (q <= n - 2) v[slot(n, Side::minus, q)] = Rational(l / wq);
  CurveClass w{n, v};
  // The i = n-1 pairings are determined by the relations; check they agree
  // with the defining conditions.
  Rational top_plus = derived_boundary_pairing(w, Side::plus);
  Rational top_minus = derived_boundary_pairing(w, Side::minus);
  Rational want_plus = p == n - 1 ? Rational(l / wp) : Rational(0);
  Rational want_minus = q == n - 1 ? Rational(l / wq) : Rational(0);
  if (top_plus != want_plus || top_minus != want_minus)
    throw std::logic_error("moving_curve_ray: boundary relations violated");
  return w;
}

MovingCurveExpansion moving_curve_expansion(int n, int p, int q) {
  require_n(n);
  if (p < 0 || p > n - 1 || q < 0 || q > n - 1)
    throw std::invalid_argument("moving_curve_expansion: index out of range");
  const Integer wp = n - p, wq = n - q;
  const Integer l = lcm(wp, wq);
  MovingCurveExpansion e;
  e.a = l / wp;
  e.b = l / wq;
  e.lambda.assign(static_cast<std::size_t>(n - 1), Integer(0));
  Integer prev = 0;  // lambda_{-1}
  e.lambda[0] = e.a - (q == 0 ? e.b : Integer(0));
  for (int r = 1; r <= n - 2; ++r) {
    Integer cur = 2 * e.lambda[static_cast<std::size_t>(r - 1)] - prev;
    if (r == n - p) cur -= e.a;
    if (r == q) cur -= e.b;
    prev = e.lambda[static_cast<std::size_t>(r - 1)];
    e.lambda[static_cast<std::size_t>(r)] = cur;
  }
  return e;
}

CurveClass expansion_pairing_vector(int n, int p, int q) {
  MovingCurveExpansion e = moving_curve_expansion(n, p, q);
  RationalVector v = RationalVector::Zero(2 * n - 1);
  for (int l = 0; l <= n - 1 - p; ++l) v += Rational(e.a) * mori_generator(n, MoriKind::gamma, l).pairings;
  for (int j = 1; j <= n - 1; ++j)
    v += Rational(e.lambda[static_cast<std::size_t>(j - 1)]) *
         mori_generator(n, MoriKind::zeta_minus, j).pairings;
  return {n, v};
}

CurveClass symmetric_expansion_pairing_vector(int n, int p, int q) {
  MovingCurveExpansion e = moving_curve_expansion(n, q, p);  // swapped roles
  RationalVector v = RationalVector::Zero(2 * n - 1);
  for (int l = q; l <= n - 1; ++l) v += Rational(e.a) * mori_generator(n, MoriKind::gamma, l).pairings;
  for (int j = 1; j <= n - 1; ++j)
    v += Rational(e.lambda[static_cast<std::size_t>(j - 1)]) *
         mori_generator(n, MoriKind::zeta_plus, j).pairings;
  return {n, v};
}

RationalVector curve_to_basis(const CurveClass& c, CurveBasis basis) {
  const int n = c.n;
  require_n(n);
  switch (basis) {
    case CurveBasis::pairing:
      return c.pairings;
    case CurveBasis::epsilon: {
      RationalVector out = c.pairings;
      for (Eigen::Index i = 1; i < out.size(); ++i) out[i] = -out[i];
      return out;
    }
    case CurveBasis::literal: {
      // kappa = c_l * l + sum_j c_j^s C_j^s; the C_j coefficients solve a
      // tridiagonal system against the pairing entries.
      RationalVector out(2 * n - 1);
      out[0] = c.pairings[0];
      for (Side side : {Side::plus, Side::minus}) {
        Rational prev = 0, cur = -c.pairings[slot(n, side, 0)];  // c_1
        out[slot(n, side, 0)] = cur;
        for (int i = 1; i <= n - 2; ++i) {
          Rational next = 2 * cur - prev - c.pairings[slot(n, side, i)];
          out[slot(n, side, i)] = next;
          prev = cur;
          cur = next;
        }
      }
      return out;
    }
  }
  throw std::logic_error("curve_to_basis: unknown basis");
}

CurveClass curve_from_basis(int n, const RationalVector& coords, CurveBasis basis) {
  require_n(n);
  if (coords.size() != 2 * n - 1) throw std::invalid_argument("curve_from_basis: bad length");
  switch (basis) {
    case CurveBasis::pairing:
      return {n, coords};
    case CurveBasis::epsilon: {
      RationalVector v = coords;
      for (Eigen::Index i = 1; i < v.size(); ++i) v[i] = -v[i];
      return {n, v};
    }
    case CurveBasis::literal: {
      // l is the unique class pairing 1 with H and 0 with every D_i^+/-.
      RationalVector v = RationalVector::Zero(2 * n - 1);
      v[0] = coords[0];
      for (int j = 1; j <= n - 1; ++j) {
        v += coords[slot(n, Side::plus, j - 1)] *
             mori_generator(n, MoriKind::zeta_plus, j).pairings;
        v += coords[slot(n, Side::minus, j - 1)] *
             mori_generator(n, MoriKind::zeta_minus, j).pairings;
      }
      return {n, v};
    }
  }
  throw std::logic_error("curve_from_basis: unknown basis");
}

}  // namespace bircones
