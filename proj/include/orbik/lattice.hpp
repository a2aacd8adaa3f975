#pragma once

/**
 * @file lattice.hpp
 * @brief Rank-2 lattices with a rotational symmetry, their torsion fixed
 *        points, and the ramification data of the quotient orbifold.
 *
 * A symmetry of order m in {2, 3, 4, 6} is multiplication by a primitive
 * m-th root of unity zeta on the lattice L = Z*tau + Z, where tau = i for
 * m in {2, 4} (square lattice) and tau = zeta_6 for m in {3, 6}
 * (hexagonal lattice).  Writing v = a*tau + b as the column (a, b)^T,
 * the symmetry becomes an integer 2x2 matrix of determinant 1; it is
 * computed here by expanding zeta*tau and zeta*1 exactly in the basis
 * {tau, 1} and refusing to continue if the coordinates are not integers.
 *
 * Points of the torus C/L fixed by a nontrivial group element are
 * torsion points; the quotient map ramifies exactly over their orbits,
 * with multiplicity equal to the stabilizer order.  The resulting
 * multiplicity lists must satisfy sum(1 - 1/m_i) = 2 (genus-1 cover of a
 * genus-0 quotient), which derive_ramification verifies before returning.
 */

#include "orbik/int2x2.hpp"
#include "orbik/quadratic.hpp"
#include "orbik/rational.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace orbik {

/// A point of the torus (Q/Z)^2, kept in canonical coordinates in [0,1).
struct TorsionPoint {
  Rational x, y;

  static TorsionPoint canonical(const Rational& x, const Rational& y) {
    return TorsionPoint{mod_one(x), mod_one(y)};
  }

  friend bool operator==(const TorsionPoint& a, const TorsionPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const TorsionPoint& a, const TorsionPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }

  std::string str() const {
    return "(" + format_rational(x) + ", " + format_rational(y) + ")";
  }
};

/// Image of a torsion point under an integer matrix, reduced mod Z^2.
inline TorsionPoint apply_mod_lattice(const Mat2& g, const TorsionPoint& w) {
  return TorsionPoint::canonical(Rational(g.a) * w.x + Rational(g.b) * w.y,
                                 Rational(g.c) * w.x + Rational(g.d) * w.y);
}

/// Coordinates (a, b) of x in the basis {tau, 1}: x = a*tau + b.
inline std::pair<Rational, Rational> lattice_coordinates(
    const QuadraticScalar& x, const QuadraticScalar& tau) {
  if (tau.im() == 0)
    throw CheckError("lattice basis element tau must be non-real");
  const Rational a = x.im() / tau.im();
  const Rational b = x.re() - a * tau.re();
  return {a, b};
}

/// A lattice together with a rotation of finite order acting on it.
struct LatticeSymmetry {
  int order = 0;             ///< 2, 3, 4 or 6
  NumberField field = NumberField::rational;
  QuadraticScalar tau;       ///< second basis vector of L = Z*tau + Z
  QuadraticScalar zeta;      ///< primitive root of unity of the given order
  Mat2 generator;            ///< matrix of multiplication by zeta on L

  /// omega(v) = a*tau + b for v = (a, b), as an exact scalar.
  QuadraticScalar embed(std::int64_t a, std::int64_t b) const {
    return QuadraticScalar(Rational(a)) * tau + QuadraticScalar(Rational(b));
  }
};

/**
 * Build the order-m rotational symmetry of the square (m = 2, 4) or
 * hexagonal (m = 3, 6) lattice.  Throws InputError for any other order:
 * the crystallographic restriction leaves no further possibilities.
 */
inline LatticeSymmetry make_symmetry(int order) {
  LatticeSymmetry s;
  s.order = order;
  switch (order) {
    case 2:
    case 4:
      s.field = NumberField::gauss;
      s.tau = QuadraticScalar::i();
      s.zeta = (order == 2) ? QuadraticScalar(NumberField::gauss, Rational(-1), Rational(0))
                            : QuadraticScalar::i();
      break;
    case 3:
      s.field = NumberField::eisenstein;
      s.tau = QuadraticScalar::zeta6();
      s.zeta = QuadraticScalar::zeta3();
      break;
    case 6:
      s.field = NumberField::eisenstein;
      s.tau = QuadraticScalar::zeta6();
      s.zeta = QuadraticScalar::zeta6();
      break;
    default:
      throw InputError("symmetry order must be one of 2, 3, 4, 6 (got " +
                       std::to_string(order) + ")");
  }

  // Matrix of multiplication by zeta in the basis {tau, 1}, column by column.
  const auto col_tau = lattice_coordinates(s.zeta * s.tau, s.tau);
  const auto col_one = lattice_coordinates(s.zeta, s.tau);
  for (const auto& c : {col_tau.first, col_tau.second, col_one.first, col_one.second})
    if (!is_integer(c))
      throw CheckError("rotation does not preserve the lattice: non-integer coordinate " +
                       format_rational(c));
  const auto as_i64 = [](const Rational& r) {
    return static_cast<std::int64_t>(boost::multiprecision::numerator(r));
  };
  s.generator = Mat2{as_i64(col_tau.first), as_i64(col_one.first),
                     as_i64(col_tau.second), as_i64(col_one.second)};

  if (s.generator.det() != 1)
    throw CheckError("symmetry generator must have determinant 1");
  if (s.generator.pow(static_cast<unsigned>(order)) != Mat2::identity())
    throw CheckError("symmetry generator does not have the declared order");
  for (int k = 1; k < order; ++k)
    if (s.generator.pow(static_cast<unsigned>(k)) == Mat2::identity())
      throw CheckError("symmetry generator has a smaller order than declared");
  return s;
}

/**
 * All torus points fixed by the k-th power of the generator, k != 0 mod
 * order.  Solved exactly: (g^k - 1) w must be integral, which the Smith
 * form U (g^k - 1) V = diag(d1, d2) turns into w = V (p/d1, q/d2)^T.
 * The count is always |det(g^k - 1)|.
 */
inline std::vector<TorsionPoint> fixed_points(const LatticeSymmetry& sym, int k) {
  const int kk = ((k % sym.order) + sym.order) % sym.order;
  if (kk == 0)
    throw InputError("the identity fixes the whole torus; pick a power between 1 and order-1");

  const Mat2 a = sym.generator.pow(static_cast<unsigned>(kk)) - Mat2::identity();
  if (a.det() == 0)
    throw CheckError("nontrivial rotation with det(g-1) = 0: fixed locus is not finite");

  const Smith2 snf = smith_form(a);
  std::vector<TorsionPoint> pts;
  pts.reserve(static_cast<std::size_t>(snf.d1 * snf.d2));
  for (std::int64_t p = 0; p < snf.d1; ++p)
    for (std::int64_t q = 0; q < snf.d2; ++q) {
      const Rational y1(p, snf.d1);
      const Rational y2(q, snf.d2);
      pts.push_back(TorsionPoint::canonical(Rational(snf.v.a) * y1 + Rational(snf.v.b) * y2,
                                            Rational(snf.v.c) * y1 + Rational(snf.v.d) * y2));
    }
  std::sort(pts.begin(), pts.end());
  if (pts.size() != static_cast<std::size_t>(std::abs(a.det())))
    throw CheckError("fixed point count disagrees with |det(g-1)|");
  return pts;
}

/// One branch orbit of the quotient map: an orbit of ramified torus points.
struct RamifiedOrbit {
  int multiplicity = 0;        ///< stabilizer order at each point of the orbit
  int orbit_size = 0;          ///< number of torus points in the orbit
  TorsionPoint representative; ///< lexicographically least point of the orbit
};

/// Ramification data of the quotient of the torus by the symmetry.
struct RamificationDatum {
  int group_order = 0;
  std::vector<RamifiedOrbit> orbits;  ///< sorted by (multiplicity, representative)

  std::vector<int> multiplicities() const {
    std::vector<int> m;
    m.reserve(orbits.size());
    for (const auto& o : orbits) m.push_back(o.multiplicity);
    return m;
  }
};

/**
 * Derive the full ramification datum: gather every point with nontrivial
 * stabilizer, split the set into group orbits, attach the stabilizer
 * order as multiplicity, and verify sum(1 - 1/m_i) = 2 exactly.
 */
inline RamificationDatum derive_ramification(const LatticeSymmetry& sym) {
  std::set<TorsionPoint> pending;
  for (int k = 1; k < sym.order; ++k)
    for (const auto& w : fixed_points(sym, k)) pending.insert(w);

  RamificationDatum datum;
  datum.group_order = sym.order;

  while (!pending.empty()) {
    const TorsionPoint rep = *pending.begin();  // lex-least of what remains
    std::vector<TorsionPoint> orbit;
    TorsionPoint w = rep;
    do {
      orbit.push_back(w);
      w = apply_mod_lattice(sym.generator, w);
    } while (!(w == rep));

    int stabilizer = 0;
    for (int k = 0; k < sym.order; ++k)
      if (apply_mod_lattice(sym.generator.pow(static_cast<unsigned>(k)), rep) == rep)
        ++stabilizer;
    if (stabilizer * static_cast<int>(orbit.size()) != sym.order)
      throw CheckError("orbit size times stabilizer order must equal the group order");
    if (stabilizer < 2)
      throw CheckError("collected a point with trivial stabilizer");

    for (const auto& p : orbit) {
      if (pending.erase(p) != 1)
        throw CheckError("orbit left the set of ramified points");
    }
    datum.orbits.push_back(RamifiedOrbit{stabilizer, static_cast<int>(orbit.size()), rep});
  }

  std::sort(datum.orbits.begin(), datum.orbits.end(),
            [](const RamifiedOrbit& a, const RamifiedOrbit& b) {
              if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
              return a.representative < b.representative;
            });

  Rational defect(0);
  for (const auto& o : datum.orbits)
    defect += Rational(1) - Rational(1, o.multiplicity);
  if (defect != Rational(2))
    throw CheckError("total branching defect must equal 2, got " + format_rational(defect));
  return datum;
}

}  // namespace orbik
