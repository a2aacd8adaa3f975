#pragma once

/**
 * @file algebra.hpp
 * @brief Basis of the path algebra modulo the quadratic relation ideal,
 *        graded by (source, target) vertex pairs, plus the Cartan matrix.
 *
 * The quiver is acyclic, so every graded piece is finite: it is the span
 * of paths a -> b modulo the span of all ideal elements p * rho * q with
 * rho a defining relation.  Since the relations start at the source
 * vertex u (no arrows enter u), the left factor p is always trivial and
 * the ideal pieces are simply the relations pushed down the chains.
 * Each graded quotient is computed by exact Gaussian elimination; the
 * surviving (non-pivot) paths form the basis, and a reduction map
 * rewrites arbitrary paths in that basis.  Right multiplication by an
 * arrow -- the structure needed to realize projective modules -- is
 * "append the arrow, then reduce".
 */

#include "orbik/matrix.hpp"
#include "orbik/quiver.hpp"
#include "orbik/rational.hpp"
#include "orbik/weighted.hpp"

#include <map>
#include <string>
#include <vector>

namespace orbik {

struct Path {
  int source = 0, target = 0;
  std::vector<int> arrows;  ///< arrow indices in traversal order (first arrow first)
};

class AlgebraBasis {
 public:
  explicit AlgebraBasis(const WeightedData& data)
      : data_(data), quiver_(data.weights) {
    data_.validate();
    const std::size_t n = quiver_.vertex_count();
    paths_.assign(n * n, {});
    lookup_.assign(n * n, {});
    rref_rows_.assign(n * n, {});
    pivots_.assign(n * n, {});
    surviving_.assign(n * n, {});

    enumerate_paths();
    build_ideal_and_reduce();
  }

  const Quiver& quiver() const { return quiver_; }
  const WeightedData& data() const { return data_; }

  const std::vector<Path>& paths(int a, int b) const { return paths_[slot(a, b)]; }
  const std::vector<int>& surviving(int a, int b) const { return surviving_[slot(a, b)]; }

  int dimension(int a, int b) const { return static_cast<int>(surviving_[slot(a, b)].size()); }

  int total_dimension() const {
    int total = 0;
    const int n = static_cast<int>(quiver_.vertex_count());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) total += dimension(a, b);
    return total;
  }

  /// Rewrite a raw path-coordinate vector on paths(a,b) in the surviving basis.
  std::vector<Rational> reduce(int a, int b, std::vector<Rational> raw) const {
    const std::size_t s = slot(a, b);
    if (raw.size() != paths_[s].size())
      throw CheckError("reduce: coordinate length mismatch");
    const auto& rows = rref_rows_[s];
    const auto& pivots = pivots_[s];
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Rational c = raw[pivots[k]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < raw.size(); ++j) raw[j] -= c * rows[k][j];
    }
    std::vector<Rational> out;
    out.reserve(surviving_[s].size());
    for (int idx : surviving_[s]) out.push_back(raw[idx]);
    return out;
  }

  /**
   * Right multiplication by an arrow: the class of the surviving path at
   * position pos in paths(a,b), extended by an arrow b -> c, expressed
   * in the surviving basis of (a,c).
   */
  std::vector<Rational> right_multiply(int a, int b, int pos, int arrow) const {
    const Arrow& al = quiver_.arrows()[arrow];
    if (al.source != b) throw CheckError("right_multiply: arrow does not start at b");
    const std::size_t s = slot(a, b);
    const Path& p = paths_[s][surviving_[s][static_cast<std::size_t>(pos)]];
    std::vector<int> seq = p.arrows;
    seq.push_back(arrow);
    const std::size_t t = slot(a, al.target);
    const auto it = lookup_[t].find(seq);
    if (it == lookup_[t].end()) throw CheckError("right_multiply: extended path not found");
    std::vector<Rational> raw(paths_[t].size(), Rational(0));
    raw[static_cast<std::size_t>(it->second)] = 1;
    return reduce(a, al.target, std::move(raw));
  }

  /// Cartan matrix: entry (a,b) = dimension of the (a,b) graded piece.
  QMatrix cartan() const {
    const std::size_t n = quiver_.vertex_count();
    QMatrix c(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        c.at(a, b) = Rational(dimension(static_cast<int>(a), static_cast<int>(b)));
    return c;
  }

 private:
  std::size_t slot(int a, int b) const {
    return static_cast<std::size_t>(a) * quiver_.vertex_count() + static_cast<std::size_t>(b);
  }

  void enumerate_paths() {
    const int n = static_cast<int>(quiver_.vertex_count());
    for (int a = 0; a < n; ++a) {
      // Breadth-first by length; arrows scanned in index order, so the
      // enumeration is deterministic and sorted by (length, lex).
      std::vector<Path> frontier{Path{a, a, {}}};
      while (!frontier.empty()) {
        std::vector<Path> next;
        for (const Path& p : frontier) {
          const std::size_t s = slot(a, p.target);
          lookup_[s].emplace(p.arrows, static_cast<int>(paths_[s].size()));
          paths_[s].push_back(p);
          if (p.arrows.size() > quiver_.vertex_count())
            throw CheckError("path longer than the vertex count: quiver has a cycle");
          for (std::size_t ai = 0; ai < quiver_.arrow_count(); ++ai) {
            if (quiver_.arrows()[ai].source != p.target) continue;
            Path q = p;
            q.arrows.push_back(static_cast<int>(ai));
            q.target = quiver_.arrows()[ai].target;
            next.push_back(std::move(q));
          }
        }
        frontier = std::move(next);
      }
    }
  }

  void build_ideal_and_reduce() {
    const int n = static_cast<int>(quiver_.vertex_count());
    const int u = 0;
    const std::vector<Relation> rels = build_relations(data_);

    // Ideal generators grouped by target vertex (all start at u).
    std::vector<std::vector<std::vector<Rational>>> gens(
        static_cast<std::size_t>(n));
    for (const Relation& rel : rels) {
      const int i = rel.branch;
      const int m = data_.weights[static_cast<std::size_t>(i - 1)];
      // Suffix arrows e_i, t_i^{m-2}, ..., pushed down the chain level by level.
      std::vector<int> suffix{quiver_.arrow_index("e" + std::to_string(i))};
      for (int j = m - 1; j >= 1; --j) {
        const int b = quiver_.chain_vertex(i, j);
        std::vector<int> p0{quiver_.arrow_index("x0")};
        std::vector<int> p1{quiver_.arrow_index("x1")};
        p0.insert(p0.end(), suffix.begin(), suffix.end());
        p1.insert(p1.end(), suffix.begin(), suffix.end());
        const std::size_t s = slot(u, b);
        std::vector<Rational> g(paths_[s].size(), Rational(0));
        g[static_cast<std::size_t>(lookup_[s].at(p0))] += rel.alpha;
        g[static_cast<std::size_t>(lookup_[s].at(p1))] += rel.beta;
        gens[static_cast<std::size_t>(b)].push_back(std::move(g));
        if (j > 1)
          suffix.push_back(quiver_.arrow_index("t" + std::to_string(i) + "_" +
                                               std::to_string(j - 1)));
      }
    }

    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const std::size_t s = slot(a, b);
        const std::size_t np = paths_[s].size();
        std::vector<std::vector<Rational>> rows;
        if (a == u)
          rows = gens[static_cast<std::size_t>(b)];
        if (!rows.empty()) {
          QMatrix m(rows.size(), np);
          for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < np; ++j) m.at(i, j) = rows[i][j];
          const std::vector<std::size_t> piv = m.rref_in_place();
          for (std::size_t k = 0; k < piv.size(); ++k) {
            pivots_[s].push_back(static_cast<int>(piv[k]));
            std::vector<Rational> row(np);
            for (std::size_t j = 0; j < np; ++j) row[j] = m.at(k, j);
            rref_rows_[s].push_back(std::move(row));
          }
        }
        std::vector<bool> is_pivot(np, false);
        for (int p : pivots_[s]) is_pivot[static_cast<std::size_t>(p)] = true;
        for (std::size_t j = 0; j < np; ++j)
          if (!is_pivot[j]) surviving_[s].push_back(static_cast<int>(j));
      }
  }

  WeightedData data_;
  Quiver quiver_;
  std::vector<std::vector<Path>> paths_;
  std::vector<std::map<std::vector<int>, int>> lookup_;
  std::vector<std::vector<std::vector<Rational>>> rref_rows_;
  std::vector<std::vector<int>> pivots_;
  std::vector<std::vector<int>> surviving_;
};

}  // namespace orbik
