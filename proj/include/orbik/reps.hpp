#pragma once

/**
 * @file reps.hpp
 * @brief Finite-dimensional modules over the quiver algebra as explicit
 *        quiver representations: Hom and Ext via minimal projective
 *        resolutions, endomorphism algebras with exact radicals,
 *        Krull-Schmidt decomposition, and seeded random modules.
 *
 * Conventions (frozen by the verified examples in the test suite):
 *  - A representation assigns to each vertex a dimension and to each
 *    arrow a -> b a matrix of shape (dim_b x dim_a), i.e. matrices act
 *    along the arrows.  Paths act by composing along the traversal
 *    order, so the defining relation of branch i reads
 *        E_i (alpha_i X_0 + beta_i X_1) = 0,
 *    with X_k the matrices of the doubled arrows and E_i the matrix of
 *    the branch arrow.
 *  - The projective at vertex a has the path spaces a -> b as fibres,
 *    with arrows acting by path extension; morphisms out of it are
 *    determined by the image of the trivial path (Yoneda).
 *  - The algebra has global dimension at most 2, so every module has a
 *    projective resolution 0 -> P2 -> P1 -> P0 -> M -> 0; the code
 *    raises an error if a kernel survives past the P2 step.
 *  - Randomized routines are Las Vegas: answers are exact; sampling
 *    only affects whether a decomposition is found or left "unknown".
 */

#include "orbik/algebra.hpp"
#include "orbik/matrix.hpp"
#include "orbik/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace orbik {

// ---------------------------------------------------------------------------
// Representations

struct Representation {
  std::vector<int> dims;      ///< one dimension per vertex (frozen vertex order)
  std::vector<QMatrix> maps;  ///< one matrix per arrow, shape dims[target] x dims[source]
};

inline int total_dim(const Representation& m) {
  int t = 0;
  for (int d : m.dims) t += d;
  return t;
}

inline void check_shapes(const Quiver& q, const Representation& m) {
  if (m.dims.size() != q.vertex_count() || m.maps.size() != q.arrow_count())
    throw CheckError("representation shape mismatch: wrong vertex or arrow count");
  for (int d : m.dims)
    if (d < 0) throw CheckError("representation shape mismatch: negative dimension");
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrows()[k];
    if (m.maps[k].rows() != static_cast<std::size_t>(m.dims[static_cast<std::size_t>(a.target)]) ||
        m.maps[k].cols() != static_cast<std::size_t>(m.dims[static_cast<std::size_t>(a.source)]))
      throw CheckError("representation shape mismatch at arrow " + a.name);
  }
}

inline Representation make_zero_representation(const Quiver& q, std::vector<int> dims) {
  Representation m;
  m.dims = std::move(dims);
  for (const Arrow& a : q.arrows())
    m.maps.emplace_back(static_cast<std::size_t>(m.dims[static_cast<std::size_t>(a.target)]),
                        static_cast<std::size_t>(m.dims[static_cast<std::size_t>(a.source)]));
  check_shapes(q, m);
  return m;
}

inline Representation simple(const Quiver& q, int vertex) {
  std::vector<int> dims(q.vertex_count(), 0);
  dims[static_cast<std::size_t>(vertex)] = 1;
  return make_zero_representation(q, std::move(dims));
}

inline Representation direct_sum(const Quiver& q, const Representation& a,
                                 const Representation& b) {
  Representation s;
  s.dims.resize(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) s.dims[v] = a.dims[v] + b.dims[v];
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& ar = q.arrows()[k];
    const std::size_t rt = static_cast<std::size_t>(s.dims[static_cast<std::size_t>(ar.target)]);
    const std::size_t cs = static_cast<std::size_t>(s.dims[static_cast<std::size_t>(ar.source)]);
    QMatrix m(rt, cs);
    for (std::size_t i = 0; i < a.maps[k].rows(); ++i)
      for (std::size_t j = 0; j < a.maps[k].cols(); ++j) m.at(i, j) = a.maps[k].at(i, j);
    const std::size_t ro = a.maps[k].rows(), co = a.maps[k].cols();
    for (std::size_t i = 0; i < b.maps[k].rows(); ++i)
      for (std::size_t j = 0; j < b.maps[k].cols(); ++j) m.at(ro + i, co + j) = b.maps[k].at(i, j);
    s.maps.push_back(std::move(m));
  }
  return s;
}

/// Matrix of a path acting on a representation (identity for the trivial path).
inline QMatrix path_action(const Representation& m, const Path& p) {
  QMatrix acc = QMatrix::identity(static_cast<std::size_t>(m.dims[static_cast<std::size_t>(p.source)]));
  for (int a : p.arrows) acc = m.maps[static_cast<std::size_t>(a)] * acc;
  return acc;
}

/// True iff every defining relation composite E_i (alpha X0 + beta X1) vanishes.
inline bool check_relations(const AlgebraBasis& basis, const Representation& m) {
  const Quiver& q = basis.quiver();
  check_shapes(q, m);
  const std::size_t x0 = static_cast<std::size_t>(q.arrow_index("x0"));
  const std::size_t x1 = static_cast<std::size_t>(q.arrow_index("x1"));
  for (const Relation& rel : build_relations(basis.data())) {
    const std::size_t e = static_cast<std::size_t>(q.arrow_index("e" + std::to_string(rel.branch)));
    const QMatrix composite = m.maps[e] * (rel.alpha * m.maps[x0] + rel.beta * m.maps[x1]);
    if (!composite.is_zero()) return false;
  }
  return true;
}

/// Projective at a vertex: fibres are the surviving path spaces out of it,
/// arrows act by path extension followed by reduction.
inline Representation projective(const AlgebraBasis& basis, int vertex) {
  const Quiver& q = basis.quiver();
  Representation p;
  p.dims.resize(q.vertex_count());
  for (std::size_t b = 0; b < q.vertex_count(); ++b)
    p.dims[b] = basis.dimension(vertex, static_cast<int>(b));
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& ar = q.arrows()[k];
    const int s = ar.source, t = ar.target;
    QMatrix m(static_cast<std::size_t>(p.dims[static_cast<std::size_t>(t)]),
              static_cast<std::size_t>(p.dims[static_cast<std::size_t>(s)]));
    for (std::size_t pos = 0; pos < static_cast<std::size_t>(p.dims[static_cast<std::size_t>(s)]); ++pos) {
      const std::vector<Rational> col =
          basis.right_multiply(vertex, s, static_cast<int>(pos), static_cast<int>(k));
      for (std::size_t i = 0; i < col.size(); ++i) m.at(i, pos) = col[i];
    }
    p.maps.push_back(std::move(m));
  }
  check_shapes(q, p);
  return p;
}

// ---------------------------------------------------------------------------
// Morphisms

/// A morphism M -> N: one matrix per vertex, shape N.dims[v] x M.dims[v].
using Morphism = std::vector<QMatrix>;

inline bool is_morphism(const Quiver& q, const Representation& m, const Representation& n,
                        const Morphism& f) {
  if (f.size() != q.vertex_count()) return false;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (f[v].rows() != static_cast<std::size_t>(n.dims[v]) ||
        f[v].cols() != static_cast<std::size_t>(m.dims[v]))
      return false;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrows()[k];
    const std::size_t s = static_cast<std::size_t>(a.source), t = static_cast<std::size_t>(a.target);
    if (!(f[t] * m.maps[k] == n.maps[k] * f[s])) return false;
  }
  return true;
}

inline Morphism compose(const Morphism& g, const Morphism& f) {
  if (g.size() != f.size()) throw CheckError("compose: vertex count mismatch");
  Morphism h;
  h.reserve(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) h.push_back(g[v] * f[v]);
  return h;
}

inline bool is_zero_morphism(const Morphism& f) {
  for (const QMatrix& m : f)
    if (!m.is_zero()) return false;
  return true;
}

struct MorphismSpace {
  int dim = 0;
  std::vector<Morphism> basis;
  std::vector<std::size_t> offsets;    ///< flat offset of each vertex block
  std::size_t flat_size = 0;
  std::vector<std::size_t> free_cols;  ///< coordinate positions, aligned with basis

  std::vector<Rational> flatten(const Morphism& f) const {
    std::vector<Rational> out(flat_size, Rational(0));
    for (std::size_t v = 0; v < f.size(); ++v) {
      std::size_t idx = offsets[v];
      for (std::size_t i = 0; i < f[v].rows(); ++i)
        for (std::size_t j = 0; j < f[v].cols(); ++j) out[idx++] = f[v].at(i, j);
    }
    return out;
  }

  /// Coordinates of a member morphism over the stored basis, read off at
  /// the free columns of the defining kernel; verified by reconstruction.
  std::vector<Rational> coordinates(const Morphism& f) const {
    const std::vector<Rational> flat = flatten(f);
    std::vector<Rational> coords;
    coords.reserve(free_cols.size());
    for (std::size_t c : free_cols) coords.push_back(flat[c]);
    std::vector<Rational> rebuilt(flat_size, Rational(0));
    for (std::size_t k = 0; k < coords.size(); ++k) {
      if (coords[k] == 0) continue;
      const std::vector<Rational> bk = flatten(basis[k]);
      for (std::size_t j = 0; j < flat_size; ++j) rebuilt[j] += coords[k] * bk[j];
    }
    if (rebuilt != flat)
      throw CheckError("morphism does not lie in the computed morphism space");
    return coords;
  }
};

/**
 * Hom(M, N): the kernel of
 *   (f_v)_v  |->  ( f_target . M_arrow - N_arrow . f_source )_arrows,
 * computed exactly; the basis vectors are verified intertwiners.
 */
inline MorphismSpace hom(const Quiver& q, const Representation& m, const Representation& n) {
  check_shapes(q, m);
  check_shapes(q, n);
  MorphismSpace space;
  space.offsets.resize(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    space.offsets[v] = space.flat_size;
    space.flat_size +=
        static_cast<std::size_t>(n.dims[v]) * static_cast<std::size_t>(m.dims[v]);
  }
  std::size_t rows = 0;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrows()[k];
    rows += static_cast<std::size_t>(n.dims[static_cast<std::size_t>(a.target)]) *
            static_cast<std::size_t>(m.dims[static_cast<std::size_t>(a.source)]);
  }
  QMatrix c(rows, space.flat_size);
  std::size_t row = 0;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrows()[k];
    const std::size_t s = static_cast<std::size_t>(a.source), t = static_cast<std::size_t>(a.target);
    const std::size_t nt = static_cast<std::size_t>(n.dims[t]);
    const std::size_t ns = static_cast<std::size_t>(n.dims[s]);
    const std::size_t mt = static_cast<std::size_t>(m.dims[t]);
    const std::size_t ms = static_cast<std::size_t>(m.dims[s]);
    for (std::size_t i = 0; i < nt; ++i)
      for (std::size_t j = 0; j < ms; ++j, ++row) {
        for (std::size_t kk = 0; kk < mt; ++kk)  // f_t[i,kk] * M_a[kk,j]
          c.at(row, space.offsets[t] + i * mt + kk) += m.maps[k].at(kk, j);
        for (std::size_t kk = 0; kk < ns; ++kk)  // - N_a[i,kk] * f_s[kk,j]
          c.at(row, space.offsets[s] + kk * ms + j) -= n.maps[k].at(i, kk);
      }
  }
  const QMatrix kernel = c.kernel_basis();
  space.free_cols = c.free_columns();
  space.dim = static_cast<int>(kernel.cols());
  for (std::size_t col = 0; col < kernel.cols(); ++col) {
    Morphism f;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      QMatrix fv(static_cast<std::size_t>(n.dims[v]), static_cast<std::size_t>(m.dims[v]));
      std::size_t idx = space.offsets[v];
      for (std::size_t i = 0; i < fv.rows(); ++i)
        for (std::size_t j = 0; j < fv.cols(); ++j) fv.at(i, j) = kernel.at(idx++, col);
      f.push_back(std::move(fv));
    }
    if (!is_morphism(q, m, n, f))
      throw CheckError("hom solver produced a non-intertwining map");
    space.basis.push_back(std::move(f));
  }
  return space;
}

// ---------------------------------------------------------------------------
// Projective covers and minimal resolutions

/// A finite direct sum of vertex projectives with generator bookkeeping.
struct ProjectiveSum {
  std::vector<int> gen_vertices;                 ///< vertex of each generator
  Representation rep;                            ///< the direct-sum representation
  std::vector<std::vector<std::size_t>> offset;  ///< offset[k][b]: fibre offset of summand k at b
};

inline ProjectiveSum projective_sum(const AlgebraBasis& basis, std::vector<int> gen_vertices) {
  const Quiver& q = basis.quiver();
  ProjectiveSum ps;
  ps.gen_vertices = std::move(gen_vertices);
  std::map<int, Representation> cache;
  for (int a : ps.gen_vertices)
    if (!cache.count(a)) cache.emplace(a, projective(basis, a));

  ps.rep.dims.assign(q.vertex_count(), 0);
  ps.offset.resize(ps.gen_vertices.size());
  for (std::size_t k = 0; k < ps.gen_vertices.size(); ++k) {
    ps.offset[k].resize(q.vertex_count());
    for (std::size_t b = 0; b < q.vertex_count(); ++b) {
      ps.offset[k][b] = static_cast<std::size_t>(ps.rep.dims[b]);
      ps.rep.dims[b] += cache.at(ps.gen_vertices[k]).dims[b];
    }
  }
  for (std::size_t ak = 0; ak < q.arrow_count(); ++ak) {
    const Arrow& ar = q.arrows()[ak];
    const std::size_t s = static_cast<std::size_t>(ar.source), t = static_cast<std::size_t>(ar.target);
    QMatrix m(static_cast<std::size_t>(ps.rep.dims[t]), static_cast<std::size_t>(ps.rep.dims[s]));
    for (std::size_t k = 0; k < ps.gen_vertices.size(); ++k) {
      const QMatrix& block = cache.at(ps.gen_vertices[k]).maps[ak];
      for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
          m.at(ps.offset[k][t] + i, ps.offset[k][s] + j) = block.at(i, j);
    }
    ps.rep.maps.push_back(std::move(m));
  }
  check_shapes(q, ps.rep);
  return ps;
}

/**
 * The morphism out of a projective sum determined by generator images
 * (Yoneda): the basis path p: a_k -> b of summand k is sent to the
 * action of p on images[k].
 */
inline Morphism morphism_from_generators(const AlgebraBasis& basis, const ProjectiveSum& ps,
                                         const Representation& target,
                                         const std::vector<std::vector<Rational>>& images) {
  const Quiver& q = basis.quiver();
  if (images.size() != ps.gen_vertices.size())
    throw CheckError("morphism_from_generators: one image per generator required");
  Morphism f;
  for (std::size_t b = 0; b < q.vertex_count(); ++b)
    f.emplace_back(static_cast<std::size_t>(target.dims[b]),
                   static_cast<std::size_t>(ps.rep.dims[b]));
  for (std::size_t k = 0; k < ps.gen_vertices.size(); ++k) {
    const int a = ps.gen_vertices[k];
    if (images[k].size() != static_cast<std::size_t>(target.dims[static_cast<std::size_t>(a)]))
      throw CheckError("morphism_from_generators: image size mismatch");
    for (std::size_t b = 0; b < q.vertex_count(); ++b) {
      const auto& surv = basis.surviving(a, static_cast<int>(b));
      for (std::size_t pos = 0; pos < surv.size(); ++pos) {
        const Path& p = basis.paths(a, static_cast<int>(b))[static_cast<std::size_t>(surv[pos])];
        const QMatrix act = path_action(target, p);
        for (std::size_t i = 0; i < act.rows(); ++i) {
          Rational entry(0);
          for (std::size_t j = 0; j < act.cols(); ++j) entry += act.at(i, j) * images[k][j];
          f[b].at(i, ps.offset[k][b] + pos) = entry;
        }
      }
    }
  }
  if (!is_morphism(q, ps.rep, target, f))
    throw CheckError("generator images do not extend to a morphism");
  return f;
}

struct Cover {
  ProjectiveSum ps;
  Morphism map;  ///< surjection ps.rep -> target
};

/**
 * Minimal projective cover: one generator per top basis vector, where
 * top_b = M_b / sum of incoming arrow images; the lifts are standard
 * basis vectors completing the incoming image space.
 */
inline Cover projective_cover(const AlgebraBasis& basis, const Representation& m) {
  const Quiver& q = basis.quiver();
  std::vector<int> gens;
  std::vector<std::vector<Rational>> images;
  for (std::size_t b = 0; b < q.vertex_count(); ++b) {
    QMatrix incoming(static_cast<std::size_t>(m.dims[b]), 0);
    for (std::size_t k = 0; k < q.arrow_count(); ++k)
      if (static_cast<std::size_t>(q.arrows()[k].target) == b)
        incoming = incoming.hstack(m.maps[k]);
    QMatrix probe = incoming.hstack(QMatrix::identity(static_cast<std::size_t>(m.dims[b])));
    const std::vector<std::size_t> pivots = probe.rref_in_place();
    for (std::size_t p : pivots) {
      if (p < incoming.cols()) continue;
      std::vector<Rational> lift(static_cast<std::size_t>(m.dims[b]), Rational(0));
      lift[p - incoming.cols()] = 1;
      gens.push_back(static_cast<int>(b));
      images.push_back(std::move(lift));
    }
  }
  Cover c{projective_sum(basis, std::move(gens)), {}};
  c.map = morphism_from_generators(basis, c.ps, m, images);
  for (std::size_t b = 0; b < q.vertex_count(); ++b)
    if (c.map[b].rank() != static_cast<std::size_t>(m.dims[b]))
      throw CheckError("projective cover failed to surject");
  return c;
}

/// A subrepresentation cut out by per-vertex column bases, with inclusion.
struct SubRep {
  Representation rep;
  Morphism incl;
};

inline SubRep subrep_from_bases(const Quiver& q, const Representation& p,
                                std::vector<QMatrix> fibre_bases) {
  SubRep s;
  s.rep.dims.resize(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (fibre_bases[v].rows() != static_cast<std::size_t>(p.dims[v]))
      throw CheckError("subrepresentation basis has wrong ambient dimension");
    s.rep.dims[v] = static_cast<int>(fibre_bases[v].cols());
  }
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrows()[k];
    const std::size_t sv = static_cast<std::size_t>(a.source), tv = static_cast<std::size_t>(a.target);
    auto x = fibre_bases[tv].solve_matrix(p.maps[k] * fibre_bases[sv]);
    if (!x) throw CheckError("subspace family is not stable under the arrow maps");
    s.rep.maps.push_back(std::move(*x));
  }
  s.incl = std::move(fibre_bases);
  if (!is_morphism(q, s.rep, p, s.incl))
    throw CheckError("subrepresentation inclusion is not a morphism");
  return s;
}

inline SubRep kernel_subrep(const Quiver& q, const Representation& p, const Morphism& f) {
  std::vector<QMatrix> bases;
  bases.reserve(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) bases.push_back(f[v].kernel_basis());
  return subrep_from_bases(q, p, std::move(bases));
}

/// Minimal resolution 0 -> P2 -> P1 -> P0 -> M -> 0.
struct Resolution {
  Cover c0;       ///< P0 -> M
  Cover c1;       ///< P1 -> ker(P0 -> M)
  Cover c2;       ///< P2 -> ker(P1 -> K1)
  Morphism d1;    ///< P1 -> P0
  Morphism d2;    ///< P2 -> P1
};

inline Resolution minimal_resolution(const AlgebraBasis& basis, const Representation& m) {
  const Quiver& q = basis.quiver();
  Resolution r;
  r.c0 = projective_cover(basis, m);
  const SubRep k1 = kernel_subrep(q, r.c0.ps.rep, r.c0.map);
  r.c1 = projective_cover(basis, k1.rep);
  r.d1 = compose(k1.incl, r.c1.map);
  const SubRep k2 = kernel_subrep(q, r.c1.ps.rep, r.c1.map);
  r.c2 = projective_cover(basis, k2.rep);
  r.d2 = compose(k2.incl, r.c2.map);
  const SubRep k3 = kernel_subrep(q, r.c2.ps.rep, r.c2.map);
  if (total_dim(k3.rep) != 0) throw CheckError("global dimension violation");
  if (!is_zero_morphism(compose(r.c0.map, r.d1)) || !is_zero_morphism(compose(r.d1, r.d2)))
    throw CheckError("resolution differentials do not compose to zero");
  return r;
}

// ---------------------------------------------------------------------------
// Ext groups

namespace detail {

/// Basis of hom(P, N) for a projective sum P, via Yoneda: one morphism per
/// (generator k, basis vector of N at its vertex).
inline std::vector<Morphism> projective_hom_basis(const AlgebraBasis& basis,
                                                  const ProjectiveSum& ps,
                                                  const Representation& n) {
  std::vector<Morphism> out;
  for (std::size_t k = 0; k < ps.gen_vertices.size(); ++k) {
    const std::size_t na = static_cast<std::size_t>(n.dims[static_cast<std::size_t>(ps.gen_vertices[k])]);
    for (std::size_t s = 0; s < na; ++s) {
      std::vector<std::vector<Rational>> images;
      for (std::size_t j = 0; j < ps.gen_vertices.size(); ++j)
        images.emplace_back(
            static_cast<std::size_t>(n.dims[static_cast<std::size_t>(ps.gen_vertices[j])]),
            Rational(0));
      images[k][s] = 1;
      out.push_back(morphism_from_generators(basis, ps, n, images));
    }
  }
  return out;
}

inline std::vector<Rational> flatten_all(const Morphism& f) {
  std::vector<Rational> out;
  for (const QMatrix& m : f)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
  return out;
}

/// Rank of the map hom(P_k, N) -> hom(P_{k+1}, N), f |-> f . d.
inline std::size_t pullback_rank(const std::vector<Morphism>& hom_basis, const Morphism& d) {
  std::vector<std::vector<Rational>> cols;
  for (const Morphism& f : hom_basis) cols.push_back(flatten_all(compose(f, d)));
  if (cols.empty()) return 0;
  return QMatrix::from_columns(cols.front().size(), cols).rank();
}

}  // namespace detail

struct ExtDims {
  int hom0 = 0;
  int ext1 = 0;
  int ext2 = 0;
};

/**
 * All three cohomology dimensions of hom(P_., N) for the minimal
 * resolution of M: dim Hom(M,N), dim Ext^1(M,N), dim Ext^2(M,N).
 */
inline ExtDims hom_ext_dims(const AlgebraBasis& basis, const Representation& m,
                            const Representation& n) {
  const Resolution r = minimal_resolution(basis, m);
  auto h = [&](const ProjectiveSum& ps) {
    int total = 0;
    for (int a : ps.gen_vertices) total += n.dims[static_cast<std::size_t>(a)];
    return total;
  };
  const int h0 = h(r.c0.ps), h1 = h(r.c1.ps), h2 = h(r.c2.ps);
  const std::vector<Morphism> b0 = detail::projective_hom_basis(basis, r.c0.ps, n);
  const std::vector<Morphism> b1 = detail::projective_hom_basis(basis, r.c1.ps, n);
  const int a0 = static_cast<int>(detail::pullback_rank(b0, r.d1));
  const int a1 = static_cast<int>(detail::pullback_rank(b1, r.d2));
  return ExtDims{h0 - a0, h1 - a1 - a0, h2 - a1};
}

inline int ext(const AlgebraBasis& basis, const Representation& m, const Representation& n,
               int degree) {
  if (degree != 1 && degree != 2) throw InputError("ext degree must be 1 or 2");
  const ExtDims d = hom_ext_dims(basis, m, n);
  return degree == 1 ? d.ext1 : d.ext2;
}

/// hom - ext1 + ext2, the alternating sum the Euler form must reproduce.
inline Rational euler_characteristic(const AlgebraBasis& basis, const Representation& m,
                                     const Representation& n) {
  const ExtDims d = hom_ext_dims(basis, m, n);
  return Rational(d.hom0 - d.ext1 + d.ext2);
}

// ---------------------------------------------------------------------------
// Endomorphism algebras, indecomposability, decomposition

struct Endomorphisms {
  MorphismSpace space;
  QMatrix trace_form;      ///< T[i][j] = trace of left-multiplication by g_i g_j
  int semisimple_dim = 0;  ///< dim End / rad = rank of the trace form
};

/**
 * End(M) with its trace-form radical: in characteristic zero the radical
 * of a finite-dimensional algebra is the radical of the trace form of
 * the regular representation, so dim(End/rad) = rank(T).
 */
inline Endomorphisms end_algebra(const AlgebraBasis& basis, const Representation& m) {
  const Quiver& q = basis.quiver();
  Endomorphisms e;
  e.space = hom(q, m, m);
  const std::size_t n = static_cast<std::size_t>(e.space.dim);
  std::vector<QMatrix> left(n, QMatrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::vector<Rational> coords =
          e.space.coordinates(compose(e.space.basis[i], e.space.basis[j]));
      for (std::size_t t = 0; t < n; ++t) left[i].at(t, j) = coords[t];
    }
  e.trace_form = QMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const QMatrix prod = left[i] * left[j];
      Rational tr(0);
      for (std::size_t t = 0; t < n; ++t) tr += prod.at(t, t);
      e.trace_form.at(i, j) = tr;
      e.trace_form.at(j, i) = tr;
    }
  e.semisimple_dim = static_cast<int>(e.trace_form.rank());
  return e;
}

namespace detail {

/// Deterministic bounded integer draw (avoids std::uniform_int_distribution,
/// whose outputs differ across standard libraries).
inline int draw_int(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

/// Characteristic polynomial coefficients (descending powers, monic) by
/// the Faddeev-LeVerrier recursion.
inline std::vector<Rational> char_poly(const QMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> coeffs{Rational(1)};
  QMatrix mk(n, n);
  Rational ck(1);
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix shifted = mk;
    for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += ck;
    mk = a * shifted;
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
    ck = -tr / Rational(static_cast<long long>(k));
    coeffs.push_back(ck);
  }
  return coeffs;
}

inline Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc(0);
  for (const Rational& c : coeffs) acc = acc * x + c;
  return acc;
}

/// Small positive divisors (and their cofactors) of |x|, best effort.
inline std::vector<Integer> bounded_divisors(Integer x, long long bound) {
  if (x < 0) x = -x;
  std::vector<Integer> out;
  if (x == 0) return out;
  for (Integer d = 1; d <= bound && d * d <= x; ++d)
    if (x % d == 0) {
      out.push_back(d);
      out.push_back(x / d);
    }
  return out;
}

/**
 * Rational roots of the characteristic polynomial, best effort: exact
 * rational-root sieve over bounded divisors of the integerized extreme
 * coefficients.  Used only to propose Fitting scalars, so an undiscovered
 * root merely leaves a split unfound (Las Vegas), never a wrong answer.
 */
inline std::set<Rational> rational_eigenvalue_candidates(const QMatrix& a) {
  std::set<Rational> roots{Rational(0), Rational(1), Rational(-1)};
  if (a.rows() == 0) return roots;
  std::vector<Rational> coeffs = char_poly(a);
  // Integerize: multiply by the lcm of denominators.
  Integer lcm_den(1);
  for (const Rational& c : coeffs) {
    const Integer d = boost::multiprecision::denominator(c);
    lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, d) * d;
  }
  std::vector<Integer> ic;
  ic.reserve(coeffs.size());
  for (const Rational& c : coeffs)
    ic.push_back(boost::multiprecision::numerator(c * Rational(lcm_den)));
  // Factor out zero roots.
  while (ic.size() > 1 && ic.back() == 0) ic.pop_back();
  if (ic.size() <= 1) return roots;
  const std::vector<Integer> ps = bounded_divisors(ic.back(), 64);
  const std::vector<Integer> qs = bounded_divisors(ic.front(), 64);
  for (const Integer& p : ps)
    for (const Integer& q : qs) {
      if (q > 4096) continue;  // keep the sieve desk-sized
      for (int sign : {1, -1}) {
        const Rational cand = Rational(sign * p) / Rational(q);
        if (eval_poly(coeffs, cand) == 0) roots.insert(cand);
      }
    }
  return roots;
}

}  // namespace detail

struct Summand {
  Representation rep;
  Morphism embedding;     ///< into the module that was decomposed
  bool certified = false; ///< true: proven indecomposable; false: unknown leaf
};

namespace detail {

inline Morphism identity_morphism(const Representation& m) {
  Morphism f;
  for (int d : m.dims) f.push_back(QMatrix::identity(static_cast<std::size_t>(d)));
  return f;
}

/// Try to split m along the stabilized kernel/image of (phi - c)^t for
/// one endomorphism phi and every candidate scalar c.  Returns the two
/// pieces with their inclusions, or nothing.
inline std::optional<std::pair<SubRep, SubRep>> try_fitting_split(const Quiver& q,
                                                                  const Representation& m,
                                                                  const Morphism& phi) {
  std::set<Rational> candidates;
  for (const QMatrix& block : phi) {
    const std::set<Rational> local = rational_eigenvalue_candidates(block);
    candidates.insert(local.begin(), local.end());
  }
  const int total = total_dim(m);
  for (const Rational& c : candidates) {
    Morphism psi = phi;
    for (std::size_t v = 0; v < psi.size(); ++v)
      for (std::size_t i = 0; i < psi[v].rows(); ++i) psi[v].at(i, i) -= c;
    // Stabilize: raise to powers until the kernel dimension stops growing.
    Morphism power = psi;
    int ker_dim = 0;
    for (int t = 0; t < total + 1; ++t) {
      int kd = 0;
      for (const QMatrix& block : power)
        kd += static_cast<int>(block.cols() - block.rank());
      if (kd == ker_dim && t > 0) break;
      ker_dim = kd;
      power = compose(power, psi);
    }
    if (ker_dim == 0 || ker_dim == total) continue;
    std::vector<QMatrix> kbases, ibases;
    bool direct = true;
    for (const QMatrix& block : power) {
      QMatrix kb = block.kernel_basis();
      QMatrix ib = block.column_space_basis();
      if (kb.cols() + ib.cols() != block.cols() ||
          kb.hstack(ib).rank() != block.cols())
        direct = false;
      kbases.push_back(std::move(kb));
      ibases.push_back(std::move(ib));
    }
    if (!direct) continue;
    return std::make_pair(subrep_from_bases(q, m, std::move(kbases)),
                          subrep_from_bases(q, m, std::move(ibases)));
  }
  return std::nullopt;
}

}  // namespace detail

/**
 * Krull-Schmidt decomposition, Las Vegas: repeatedly probe endomorphisms
 * (basis elements first, then seeded small random combinations), split
 * along Fitting kernels at rational eigenvalue candidates, and recurse.
 * Every returned piece is exact; pieces the budget could not certify or
 * split further are flagged uncertified.  The embeddings of the output
 * assemble to an explicit isomorphism onto the input.
 */
inline std::vector<Summand> decompose(const AlgebraBasis& basis, const Representation& m,
                                      std::uint64_t seed = 0, int budget = 128) {
  const Quiver& q = basis.quiver();
  check_shapes(q, m);
  std::vector<Summand> out;
  if (total_dim(m) == 0) return out;
  std::mt19937_64 rng(seed);
  int remaining = budget;

  struct Node {
    Representation rep;
    Morphism embedding;
  };
  std::vector<Node> stack{{m, detail::identity_morphism(m)}};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    const Endomorphisms end = end_algebra(basis, node.rep);
    if (end.semisimple_dim == 1) {
      out.push_back(Summand{std::move(node.rep), std::move(node.embedding), true});
      continue;
    }
    bool split_found = false;
    const std::size_t nb = end.space.basis.size();
    for (std::size_t probe = 0; remaining > 0 && !split_found; ++probe) {
      Morphism phi;
      if (probe < nb) {
        phi = end.space.basis[probe];
      } else if (probe < nb + static_cast<std::size_t>(budget)) {
        phi = detail::identity_morphism(node.rep);
        for (QMatrix& block : phi)
          for (std::size_t i = 0; i < block.rows(); ++i) block.at(i, i) = 0;
        for (std::size_t k = 0; k < nb; ++k) {
          const int c = detail::draw_int(rng, -3, 3);
          if (c == 0) continue;
          for (std::size_t v = 0; v < phi.size(); ++v)
            phi[v] += Rational(c) * end.space.basis[k][v];
        }
      } else {
        break;
      }
      --remaining;
      auto split = detail::try_fitting_split(q, node.rep, phi);
      if (split) {
        stack.push_back(Node{std::move(split->first.rep),
                             compose(node.embedding, split->first.incl)});
        stack.push_back(Node{std::move(split->second.rep),
                             compose(node.embedding, split->second.incl)});
        split_found = true;
      }
    }
    if (!split_found)
      out.push_back(Summand{std::move(node.rep), std::move(node.embedding), false});
  }

  // The pieces must reassemble: dims add up and the embeddings form an
  // isomorphism from the direct sum onto the input.
  std::vector<int> dim_sum(q.vertex_count(), 0);
  for (const Summand& s : out)
    for (std::size_t v = 0; v < q.vertex_count(); ++v) dim_sum[v] += s.rep.dims[v];
  if (dim_sum != m.dims) throw CheckError("decomposition lost or gained dimensions");
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    QMatrix assembled(static_cast<std::size_t>(m.dims[v]), 0);
    for (const Summand& s : out) assembled = assembled.hstack(s.embedding[v]);
    if (assembled.rank() != static_cast<std::size_t>(m.dims[v]))
      throw CheckError("decomposition embeddings do not assemble to an isomorphism");
  }
  return out;
}

enum class Indecomposability { yes, no, unknown };

/**
 * Indecomposability over the rationals: certified "yes" when
 * dim End/rad = 1; "no" when a split is found; otherwise "unknown"
 * (an idempotent may live over a field extension).
 */
inline Indecomposability is_indecomposable(const AlgebraBasis& basis, const Representation& m,
                                           std::uint64_t seed = 0, int budget = 64) {
  if (total_dim(m) == 0) throw InputError("the zero module has no indecomposability status");
  const Endomorphisms end = end_algebra(basis, m);
  if (end.semisimple_dim == 1) return Indecomposability::yes;
  std::mt19937_64 rng(seed);
  const std::size_t nb = end.space.basis.size();
  for (int probe = 0; probe < budget; ++probe) {
    Morphism phi;
    if (static_cast<std::size_t>(probe) < nb) {
      phi = end.space.basis[static_cast<std::size_t>(probe)];
    } else {
      phi = detail::identity_morphism(m);
      for (QMatrix& block : phi)
        for (std::size_t i = 0; i < block.rows(); ++i) block.at(i, i) = 0;
      for (std::size_t k = 0; k < nb; ++k) {
        const int c = detail::draw_int(rng, -3, 3);
        if (c == 0) continue;
        for (std::size_t v = 0; v < phi.size(); ++v)
          phi[v] += Rational(c) * end.space.basis[k][v];
      }
    }
    if (detail::try_fitting_split(basis.quiver(), m, phi)) return Indecomposability::no;
  }
  return Indecomposability::unknown;
}

// ---------------------------------------------------------------------------
// Random relation-satisfying modules

/**
 * Seeded random module: dimensions uniform in [0, dim_bound], the chain
 * and branch arrows sampled freely with small integer entries, and the
 * doubled-arrow pair (X0, X1) drawn from the exact solution kernel of
 * the relation system E_i (alpha_i X0 + beta_i X1) = 0, so the output
 * always satisfies check_relations.
 */
inline Representation random_module(const AlgebraBasis& basis, int dim_bound,
                                    std::uint64_t seed) {
  if (dim_bound < 1) throw InputError("dim_bound must be at least 1");
  const Quiver& q = basis.quiver();
  std::mt19937_64 rng(seed);

  std::vector<int> dims(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) dims[v] = detail::draw_int(rng, 0, dim_bound);
  Representation m = make_zero_representation(q, std::move(dims));

  const std::size_t x0 = static_cast<std::size_t>(q.arrow_index("x0"));
  const std::size_t x1 = static_cast<std::size_t>(q.arrow_index("x1"));
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    if (k == x0 || k == x1) continue;
    for (std::size_t i = 0; i < m.maps[k].rows(); ++i)
      for (std::size_t j = 0; j < m.maps[k].cols(); ++j)
        m.maps[k].at(i, j) = Rational(detail::draw_int(rng, -2, 2));
  }

  const std::size_t du = static_cast<std::size_t>(m.dims[0]);
  const std::size_t dv = static_cast<std::size_t>(m.dims[1]);
  const std::size_t unknowns = 2 * dv * du;
  if (unknowns > 0) {
    const std::vector<Relation> rels = build_relations(basis.data());
    std::size_t rows = 0;
    for (const Relation& rel : rels) {
      const int mwt = basis.data().weights[static_cast<std::size_t>(rel.branch - 1)];
      rows += static_cast<std::size_t>(
                  m.dims[static_cast<std::size_t>(q.chain_vertex(rel.branch, mwt - 1))]) *
              du;
    }
    QMatrix c(rows, unknowns);
    std::size_t row = 0;
    for (const Relation& rel : rels) {
      const std::size_t e =
          static_cast<std::size_t>(q.arrow_index("e" + std::to_string(rel.branch)));
      const QMatrix& em = m.maps[e];
      for (std::size_t r = 0; r < em.rows(); ++r)
        for (std::size_t col = 0; col < du; ++col, ++row)
          for (std::size_t k = 0; k < dv; ++k) {
            c.at(row, k * du + col) += rel.alpha * em.at(r, k);            // X0[k, col]
            c.at(row, dv * du + k * du + col) += rel.beta * em.at(r, k);   // X1[k, col]
          }
    }
    const QMatrix kernel = c.kernel_basis();
    std::vector<Rational> flat(unknowns, Rational(0));
    for (std::size_t b = 0; b < kernel.cols(); ++b) {
      const int coeff = detail::draw_int(rng, -2, 2);
      if (coeff == 0) continue;
      for (std::size_t i = 0; i < unknowns; ++i)
        flat[i] += Rational(coeff) * kernel.at(i, b);
    }
    for (std::size_t k = 0; k < dv; ++k)
      for (std::size_t j = 0; j < du; ++j) {
        m.maps[x0].at(k, j) = flat[k * du + j];
        m.maps[x1].at(k, j) = flat[dv * du + k * du + j];
      }
  }
  if (!check_relations(basis, m))
    throw CheckError("random module escaped the relation kernel");
  return m;
}

}  // namespace orbik
