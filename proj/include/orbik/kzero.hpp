#pragma once

/**
 * @file kzero.hpp
 * @brief The K-group lattice of the quiver algebra and of the quotient
 *        curve: Euler form, Gram matrix, degree/rank, transport between
 *        the two coordinate systems, dual bases, and mutations.
 *
 * Two coordinate systems describe the same lattice of rank
 * 2 + sum(m_i - 1):
 *
 *  - DimVector: coefficients over the simple modules, i.e. dimension
 *    vectors (dim U, dim V, dim W_i^j).  The Euler form here is
 *    x^T E y with E = I - A + R (A = arrow counts, R = relation counts),
 *    valid because the algebra has global dimension <= 2.
 *
 *  - CurveClass: coefficients over the sheaf basis
 *    ( pi*O(n), pi*O(n+1), O_{j D_i} for each branch i and 1 <= j < m_i ),
 *    which is simultaneously the exceptional collection of the tilting
 *    bundle.  The pairing here is x^T G y with G the Gram matrix, which
 *    coincides with the Cartan matrix of the algebra in the frozen
 *    vertex order (and is therefore upper unitriangular).
 *
 * Transport: a curve class c is carried to the dimension vector
 * (chi(E_i, c))_i = G * c.  The degree/rank lemma this realizes is
 * checked exactly, basis class by basis class, in
 * verify_deg_rk_transport, and the dual basis produced from G^{-1}
 * matches explicit difference classes of the torsion sheaves.
 */

#include "orbik/algebra.hpp"
#include "orbik/matrix.hpp"
#include "orbik/report.hpp"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace orbik {

using DimVector = std::vector<Rational>;

inline DimVector to_dim_vector(const std::vector<int>& d) {
  DimVector out;
  out.reserve(d.size());
  for (int x : d) out.emplace_back(x);
  return out;
}

inline std::string vector_str(const std::vector<Rational>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << format_rational(v[i]);
  }
  os << ")";
  return os.str();
}

/// E = I - A + R: identity minus arrow counts plus relation counts.
inline QMatrix euler_matrix(const AlgebraBasis& basis) {
  const Quiver& q = basis.quiver();
  const std::size_t n = q.vertex_count();
  QMatrix e = QMatrix::identity(n);
  for (const Arrow& a : q.arrows())
    e.at(static_cast<std::size_t>(a.source), static_cast<std::size_t>(a.target)) -= 1;
  for (const Relation& rel : build_relations(basis.data())) {
    const int m = basis.data().weights[static_cast<std::size_t>(rel.branch - 1)];
    const int tgt = q.chain_vertex(rel.branch, m - 1);
    e.at(0, static_cast<std::size_t>(tgt)) += 1;
  }
  return e;
}

inline Rational bilinear_form(const QMatrix& m, const std::vector<Rational>& x,
                              const std::vector<Rational>& y, const char* what) {
  if (x.size() != m.rows() || y.size() != m.cols())
    throw CheckError(std::string(what) + ": vector size does not match the lattice rank");
  Rational total(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rational row(0);
    for (std::size_t j = 0; j < y.size(); ++j) row += m.at(i, j) * y[j];
    total += x[i] * row;
  }
  return total;
}

inline Rational euler_form(const QMatrix& euler, const DimVector& x, const DimVector& y) {
  return bilinear_form(euler, x, y, "euler_form");
}

inline Rational euler_form(const AlgebraBasis& basis, const DimVector& x, const DimVector& y) {
  return euler_form(euler_matrix(basis), x, y);
}

/// Gram matrix of the exceptional collection = Cartan matrix in the frozen
/// vertex order.  Unitriangularity is enforced: a failure would mean the
/// vertex order and the collection order have drifted apart.
inline QMatrix gram_matrix(const AlgebraBasis& basis) {
  const QMatrix g = basis.cartan();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (g.at(i, i) != 1)
      throw CheckError("gram matrix must have unit diagonal");
    for (std::size_t j = 0; j < i; ++j)
      if (g.at(i, j) != 0)
        throw CheckError("gram matrix must be upper triangular in the frozen vertex order");
  }
  return g;
}

inline int k0_rank(const WeightedData& data) {
  int r = 2;
  for (int m : data.weights) r += m - 1;
  return r;
}

struct DegRank {
  Rational deg;
  Rational rk;
  bool operator==(const DegRank& o) const { return deg == o.deg && rk == o.rk; }
  std::string str() const {
    return "(deg " + format_rational(deg) + ", rk " + format_rational(rk) + ")";
  }
};

/**
 * Degree and rank of a dimension vector:
 *   deg_n(d) = N * ( n*dimU - (n-1)*dimV - sum_{i,j} dimW_i^j / m_i ),
 *   rk(d)    = dimU - dimV.
 * The inner sum is kept exact and N is applied last.
 */
inline DegRank deg_rk(const WeightedData& data, long long n, const DimVector& d) {
  const std::size_t expected = static_cast<std::size_t>(k0_rank(data));
  if (d.size() != expected)
    throw CheckError("deg_rk: vector size does not match the lattice rank");
  Rational unit = Rational(n) * d[0] - Rational(n - 1) * d[1];
  std::size_t idx = 2;
  for (int m : data.weights)
    for (int j = m - 1; j >= 1; --j) unit -= d[idx++] / Rational(m);
  return DegRank{Rational(data.N) * unit, d[0] - d[1]};
}

/**
 * A class on the quotient curve in the sheaf basis
 * ( pi*O(n), pi*O(n+1), O_{j D_i} ), indexed exactly like the vertices.
 */
struct CurveClass {
  std::vector<Rational> coords;

  static CurveClass basis(std::size_t k, std::size_t size) {
    CurveClass c;
    c.coords.assign(size, Rational(0));
    c.coords[k] = 1;
    return c;
  }
  static CurveClass zero(std::size_t size) {
    CurveClass c;
    c.coords.assign(size, Rational(0));
    return c;
  }
  bool operator==(const CurveClass& o) const { return coords == o.coords; }
  CurveClass operator+(const CurveClass& o) const {
    CurveClass out = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) out.coords[i] += o.coords[i];
    return out;
  }
  CurveClass operator-(const CurveClass& o) const {
    CurveClass out = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) out.coords[i] -= o.coords[i];
    return out;
  }
  CurveClass operator-() const {
    CurveClass out = *this;
    for (Rational& c : out.coords) c = -c;
    return out;
  }
  friend CurveClass operator*(const Rational& s, CurveClass c) {
    for (Rational& x : c.coords) x *= s;
    return c;
  }
  std::string str() const { return vector_str(coords); }
};

/// Human-readable name of the k-th basis class, for check reports.
inline std::string basis_class_name(const AlgebraBasis& basis, std::size_t k, long long n) {
  const Vertex& v = basis.quiver().vertices()[k];
  if (v.name == "u") return "pi*O(" + std::to_string(n) + ")";
  if (v.name == "v") return "pi*O(" + std::to_string(n + 1) + ")";
  return "O(" + std::to_string(v.level) + "D" + std::to_string(v.branch) + ")";
}

/// (deg, rk) of a curve class, extended linearly from the generator values
/// (N n, 1), (N (n+1), 1), (j N / m_i, 0).
inline DegRank curve_class_deg_rk(const WeightedData& data, long long n, const CurveClass& c) {
  const std::size_t expected = static_cast<std::size_t>(k0_rank(data));
  if (c.coords.size() != expected)
    throw CheckError("curve_class_deg_rk: class size does not match the lattice rank");
  Rational deg = Rational(data.N) * (Rational(n) * c.coords[0] + Rational(n + 1) * c.coords[1]);
  Rational rk = c.coords[0] + c.coords[1];
  std::size_t idx = 2;
  for (int m : data.weights)
    for (int j = m - 1; j >= 1; --j)
      deg += c.coords[idx++] * Rational(j) * Rational(data.N) / Rational(m);
  return DegRank{deg, rk};
}

/// Pairing of curve classes: chi(x, y) = x^T G y.
inline Rational chi_class(const QMatrix& gram, const CurveClass& x, const CurveClass& y) {
  return bilinear_form(gram, x.coords, y.coords, "chi_class");
}

/// Transport of a curve class to a dimension vector: (chi(E_i, c))_i = G c.
inline DimVector transport(const QMatrix& gram, const CurveClass& c) {
  if (c.coords.size() != gram.cols())
    throw CheckError("transport: class size does not match the lattice rank");
  return gram * c.coords;
}

inline DimVector transport(const AlgebraBasis& basis, const CurveClass& c) {
  return transport(gram_matrix(basis), c);
}

/**
 * Exact check, one basis class at a time, that transport preserves
 * degree and rank: deg_rk(G * e_k) must equal the sheaf-side value.
 */
inline std::vector<Check> verify_deg_rk_transport(const AlgebraBasis& basis, long long n) {
  const QMatrix g = gram_matrix(basis);
  const std::size_t r = g.rows();
  std::vector<Check> checks;
  for (std::size_t k = 0; k < r; ++k) {
    const CurveClass c = CurveClass::basis(k, r);
    const DegRank sheaf_side = curve_class_deg_rk(basis.data(), n, c);
    const DegRank module_side = deg_rk(basis.data(), n, transport(g, c));
    checks.push_back(Check{"transport preserves (deg, rk) of " + basis_class_name(basis, k, n),
                           sheaf_side == module_side, sheaf_side.str(), module_side.str()});
  }
  return checks;
}

/// Dual basis f_j with chi(e_i, f_j) = delta_ij: the columns of G^{-1},
/// which must coincide with the columns of the Euler matrix.
inline std::vector<CurveClass> dual_basis(const AlgebraBasis& basis) {
  const QMatrix g = gram_matrix(basis);
  const QMatrix ginv = g.inverse();
  if (!(g * ginv == QMatrix::identity(g.rows())))
    throw CheckError("gram inverse failed its defining identity");
  if (!(ginv == euler_matrix(basis)))
    throw CheckError("gram inverse must equal the Euler matrix in the frozen conventions");
  std::vector<CurveClass> duals;
  for (std::size_t j = 0; j < g.cols(); ++j) {
    CurveClass f = CurveClass::zero(g.rows());
    f.coords = ginv.col(j);
    duals.push_back(std::move(f));
  }
  return duals;
}

/**
 * Checks on the dual basis: the pairing matrix is the identity, every
 * dual class is integral, and each dual matches its closed form:
 *   f_u = pi*O(n),   f_v = -pi*O(n-1) = -2 e_u + e_v,
 *   f_{w_i^j} = -( O((j+1)D_i) - O(j D_i) )        for j < m_i - 1,
 *   f_{w_i^{m_i-1}} = -( (e_v - e_u) - O((m_i-1)D_i) ),
 * where the last line reads the full-period torsion class O(m_i D_i) as
 * e_v - e_u; that identification is made at the (deg, rk) level only.
 */
inline std::vector<Check> verify_dual_basis(const AlgebraBasis& basis, long long n) {
  const QMatrix g = gram_matrix(basis);
  const std::vector<CurveClass> duals = dual_basis(basis);
  const std::size_t r = g.rows();
  std::vector<Check> checks;

  bool pairing_ok = true;
  for (std::size_t i = 0; i < r && pairing_ok; ++i)
    for (std::size_t j = 0; j < r && pairing_ok; ++j)
      pairing_ok = chi_class(g, CurveClass::basis(i, r), duals[j]) == Rational(i == j ? 1 : 0);
  checks.push_back(Check{"pairing of (basis, dual basis) is the identity matrix", pairing_ok,
                         pairing_ok ? "identity" : "mismatch", "identity"});

  bool integral = true;
  for (const CurveClass& f : duals)
    for (const Rational& c : f.coords)
      if (!is_integer(c)) integral = false;
  checks.push_back(Check{"dual classes are integral", integral,
                         integral ? "integer coordinates" : "fractional coordinate found",
                         "integer coordinates"});

  const Quiver& q = basis.quiver();
  const CurveClass e_u = CurveClass::basis(0, r);
  const CurveClass e_v = CurveClass::basis(1, r);
  checks.push_back(Check{"dual at u equals pi*O(" + std::to_string(n) + ")",
                         duals[0] == e_u, duals[0].str(), e_u.str()});
  const CurveClass minus_twist_down = Rational(-2) * e_u + e_v;  // -pi*O(n-1)
  checks.push_back(Check{"dual at v equals -pi*O(" + std::to_string(n - 1) + ")",
                         duals[1] == minus_twist_down, duals[1].str(), minus_twist_down.str()});

  std::size_t idx = 2;
  for (std::size_t bi = 0; bi < basis.data().weights.size(); ++bi) {
    const int i = static_cast<int>(bi) + 1;
    const int m = basis.data().weights[bi];
    for (int j = m - 1; j >= 1; --j, ++idx) {
      const CurveClass e_j = CurveClass::basis(static_cast<std::size_t>(q.chain_vertex(i, j)), r);
      CurveClass expected = CurveClass::zero(r);
      std::string name;
      if (j < m - 1) {
        const CurveClass e_next =
            CurveClass::basis(static_cast<std::size_t>(q.chain_vertex(i, j + 1)), r);
        expected = e_j - e_next;
        name = "dual at w" + std::to_string(i) + "_" + std::to_string(j) + " equals -(O(" +
               std::to_string(j + 1) + "D" + std::to_string(i) + ") - O(" + std::to_string(j) +
               "D" + std::to_string(i) + "))";
      } else {
        expected = e_u - e_v + e_j;
        name = "dual at w" + std::to_string(i) + "_" + std::to_string(j) +
               " equals -(O(" + std::to_string(m) + "D" + std::to_string(i) + ") - O(" +
               std::to_string(j) + "D" + std::to_string(i) +
               ")) with the full period read as pi*O(n+1) - pi*O(n) (deg/rk level)";
      }
      checks.push_back(Check{name, duals[idx] == expected, duals[idx].str(), expected.str()});
    }
  }
  return checks;
}

enum class MutationSide { left, right };

/**
 * One mutation step on an ordered list of classes.  Left mutation at p
 * replaces (E, F) = (classes[p], classes[p+1]) by (chi(E,F) E - F, E);
 * right mutation replaces it by (F, chi(E,F) F - E).  The two are
 * mutually inverse whenever chi(F, E) = 0.
 */
inline std::vector<CurveClass> mutate_step(const QMatrix& gram, std::vector<CurveClass> classes,
                                           std::size_t position,
                                           MutationSide side = MutationSide::left) {
  if (position + 1 >= classes.size())
    throw InputError("mutation position out of range");
  const CurveClass e = classes[position];
  const CurveClass f = classes[position + 1];
  const Rational chi = chi_class(gram, e, f);
  if (side == MutationSide::left) {
    classes[position] = chi * e - f;
    classes[position + 1] = e;
  } else {
    classes[position] = f;
    classes[position + 1] = chi * f - e;
  }
  return classes;
}

/**
 * The full mutation chain that turns the difference-class collection
 *   ( pi*O(n), pi*O(n+1), then per branch:
 *     O(D_i), -(O(2D_i) - O(D_i)), +(O(3D_i) - O(2D_i)), ... )
 * into the descending torsion collection
 *   ( pi*O(n), pi*O(n+1), then per branch: O((m_i-1)D_i), ..., O(D_i) ).
 *
 * Within the block of branch i, round k = 1 .. m_i-2 left-mutates at the
 * in-block positions k-1, k-2, ..., 0; after round k the head of the
 * block must be O((k+1)D_i), which is precisely the short-exact-sequence
 * relation [O((k+1)D_i)] = [zeta_i^k] + [O(k D_i)] at lattice level.
 * Finally the recorded left steps, undone right-to-left by right
 * mutations, must restore the starting collection.
 */
inline std::vector<Check> verify_mutation_chain(const AlgebraBasis& basis) {
  const QMatrix g = gram_matrix(basis);
  const Quiver& q = basis.quiver();
  const std::size_t r = g.rows();
  std::vector<Check> checks;

  std::vector<CurveClass> collection{CurveClass::basis(0, r), CurveClass::basis(1, r)};
  std::vector<CurveClass> target = collection;
  for (std::size_t bi = 0; bi < basis.data().weights.size(); ++bi) {
    const int i = static_cast<int>(bi) + 1;
    const int m = basis.data().weights[bi];
    auto e_level = [&](int j) {
      return CurveClass::basis(static_cast<std::size_t>(q.chain_vertex(i, j)), r);
    };
    collection.push_back(e_level(1));
    Rational sign(1);
    for (int a = 1; a <= m - 2; ++a) {
      sign = -sign;
      collection.push_back(sign * (e_level(a + 1) - e_level(a)));
    }
    for (int j = m - 1; j >= 1; --j) target.push_back(e_level(j));
  }
  const std::vector<CurveClass> start = collection;

  std::vector<std::size_t> steps;
  std::size_t offset = 2;
  for (std::size_t bi = 0; bi < basis.data().weights.size(); ++bi) {
    const int i = static_cast<int>(bi) + 1;
    const int m = basis.data().weights[bi];
    for (int k = 1; k <= m - 2; ++k) {
      for (int p = k - 1; p >= 0; --p) {
        const std::size_t pos = offset + static_cast<std::size_t>(p);
        collection = mutate_step(g, std::move(collection), pos, MutationSide::left);
        steps.push_back(pos);
      }
      const CurveClass expected =
          CurveClass::basis(static_cast<std::size_t>(q.chain_vertex(i, k + 1)), r);
      checks.push_back(Check{"branch " + std::to_string(i) + ": mutation round " +
                                 std::to_string(k) + " produces O(" + std::to_string(k + 1) +
                                 "D" + std::to_string(i) + ")",
                             collection[offset] == expected, collection[offset].str(),
                             expected.str()});
    }
    offset += static_cast<std::size_t>(m - 1);
  }

  bool final_ok = collection.size() == target.size();
  for (std::size_t k = 0; final_ok && k < target.size(); ++k)
    final_ok = collection[k] == target[k];
  checks.push_back(Check{"mutated collection equals the descending torsion collection", final_ok,
                         final_ok ? "collections agree" : "collections differ",
                         "collections agree"});

  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    collection = mutate_step(g, std::move(collection), *it, MutationSide::right);
  bool undo_ok = collection.size() == start.size();
  for (std::size_t k = 0; undo_ok && k < start.size(); ++k)
    undo_ok = collection[k] == start[k];
  checks.push_back(Check{"right mutations undo the chain", undo_ok,
                         undo_ok ? "starting collection restored" : "round trip drifted",
                         "starting collection restored"});
  return checks;
}

}  // namespace orbik
