#pragma once

/**
 * @file cocycle.hpp
 * @brief Affine 1-cocycles for the lattice action on the complex line,
 *        and their symmetrization under the rotation group.
 *
 * For a lattice vector v = (a, b) (that is, a*tau + b), the base cocycle
 * is the affine function
 *
 *     c0_v(z) = -2a * z - a * omega(v),        omega(v) = a*tau + b.
 *
 * It satisfies the defining box identity exactly:
 *
 *     c_{v1}(z) + c_{v2}(z + omega(v1)) - c_{v1+v2}(z) = det(v1, v2).
 *
 * Averaging over the rotation group G = <g> of order m,
 *
 *     c_v(z) = (1/m) * sum_j c0_{g^j v}(zeta^j z),
 *
 * keeps the identity (each summand family satisfies it with the same
 * right-hand side, since det(g) = 1) and gains equivariance:
 * c_{g v}(zeta z) = c_v(z), i.e. p_{g v} * zeta = p_v and q_{g v} = q_v.
 * verify helpers below check all of this symbolically -- no floats.
 */

#include "orbik/lattice.hpp"
#include "orbik/quadratic.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orbik {

/// The affine function z |-> p*z + q with exact coefficients.
struct AffineFunction {
  QuadraticScalar p, q;

  friend bool operator==(const AffineFunction& f, const AffineFunction& g) {
    return f.p == g.p && f.q == g.q;
  }
  friend bool operator!=(const AffineFunction& f, const AffineFunction& g) {
    return !(f == g);
  }

  std::string str() const {
    return "(" + p.str() + ")*z + (" + q.str() + ")";
  }
};

/// Integer lattice vector v = a*tau + b.
struct LatticeVector {
  std::int64_t a = 0, b = 0;

  friend LatticeVector operator+(const LatticeVector& v, const LatticeVector& w) {
    return LatticeVector{v.a + w.a, v.b + w.b};
  }
  friend bool operator==(const LatticeVector& v, const LatticeVector& w) {
    return v.a == w.a && v.b == w.b;
  }
  std::string str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
};

inline LatticeVector apply(const Mat2& g, const LatticeVector& v) {
  return LatticeVector{g.a * v.a + g.b * v.b, g.c * v.a + g.d * v.b};
}

inline std::int64_t det2(const LatticeVector& v, const LatticeVector& w) {
  return v.a * w.b - v.b * w.a;
}

/// c0_v(z) = -2a*z - a*omega(v).
inline AffineFunction cocycle_base(const LatticeSymmetry& sym, const LatticeVector& v) {
  const QuadraticScalar a(Rational(v.a));
  return AffineFunction{QuadraticScalar(Rational(-2 * v.a)),
                        -a * sym.embed(v.a, v.b)};
}

/// Group average (1/m) * sum_j c0_{g^j v}(zeta^j z), expanded in closed form.
inline AffineFunction cocycle_averaged(const LatticeSymmetry& sym, const LatticeVector& v) {
  QuadraticScalar p(Rational(0)), q(Rational(0));
  QuadraticScalar zeta_j(Rational(1));
  LatticeVector vj = v;
  for (int j = 0; j < sym.order; ++j) {
    const AffineFunction base = cocycle_base(sym, vj);
    p += base.p * zeta_j;  // substituting z -> zeta^j z scales the slope
    q += base.q;
    zeta_j *= sym.zeta;
    vj = apply(sym.generator, vj);
  }
  const QuadraticScalar inv_m(Rational(1, sym.order));
  return AffineFunction{inv_m * p, inv_m * q};
}

/**
 * Symbolic check of the box identity for one pair (v1, v2), for a family
 * given by a callable LatticeVector -> AffineFunction.  The left side is
 * affine in z, so it equals the constant det(v1, v2) iff the slope part
 * cancels and the constant part matches.
 */
template <typename Family>
bool verify_cocycle_identity(const LatticeSymmetry& sym, Family&& family,
                             const LatticeVector& v1, const LatticeVector& v2) {
  const AffineFunction f1 = family(v1);
  const AffineFunction f2 = family(v2);
  const AffineFunction f12 = family(v1 + v2);
  const QuadraticScalar slope = f1.p + f2.p - f12.p;
  const QuadraticScalar constant = f1.q + f2.p * sym.embed(v1.a, v1.b) + f2.q - f12.q;
  return slope.is_zero() && constant == QuadraticScalar(Rational(det2(v1, v2)));
}

/// Equivariance of the averaged family at v: c_{g v}(zeta z) = c_v(z).
inline bool verify_cocycle_invariance(const LatticeSymmetry& sym, const LatticeVector& v) {
  const AffineFunction cv = cocycle_averaged(sym, v);
  const AffineFunction cgv = cocycle_averaged(sym, apply(sym.generator, v));
  return cgv.p * sym.zeta == cv.p && cgv.q == cv.q;
}

/// All nonzero vectors with |a|, |b| <= radius, in deterministic order.
inline std::vector<LatticeVector> lattice_box(std::int64_t radius) {
  std::vector<LatticeVector> out;
  for (std::int64_t a = -radius; a <= radius; ++a)
    for (std::int64_t b = -radius; b <= radius; ++b)
      if (a != 0 || b != 0) out.push_back(LatticeVector{a, b});
  return out;
}

}  // namespace orbik
