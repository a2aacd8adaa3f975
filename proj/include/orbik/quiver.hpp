#pragma once

/**
 * @file quiver.hpp
 * @brief The star-of-chains quiver attached to weighted branch data, and
 *        its quadratic relations.
 *
 * For weights (m_1, ..., m_r) the quiver has
 *
 *   vertices: u, v, and chains w_i^{m_i-1}, ..., w_i^1   (one per weight)
 *   arrows:   x0, x1 : u -> v
 *             e_i    : v -> w_i^{m_i-1}
 *             t_i^j  : w_i^{j+1} -> w_i^j   (j = m_i-2, ..., 1)
 *
 * so both counts equal 2 + sum(m_i - 1).  The global vertex order is
 * (u, v, then each chain in arrow-flow order w_i^{m_i-1} down to w_i^1);
 * every matrix in the library (Cartan, Euler, Gram, dimension vectors)
 * is indexed this way, which is exactly the order that makes the path
 * matrices upper triangular.
 *
 * The relation attached to the branch point lambda_i = [alpha_i : beta_i]
 * is the quadratic (alpha_i x0 + beta_i x1) * e_i = 0, where p * q means
 * "p first, then q".  Infinity = [1:0] gives x0 * e_i = 0, and [0:1]
 * gives x1 * e_i = 0.
 */

#include "orbik/rational.hpp"
#include "orbik/weighted.hpp"

#include <string>
#include <vector>

namespace orbik {

struct Vertex {
  std::string name;  ///< "u", "v", or "w{i}_{j}" (1-based branch index i)
  int branch = 0;    ///< 0 for u,v; 1-based branch index for chain vertices
  int level = 0;     ///< j for w_i^j; 0 for u,v
};

struct Arrow {
  std::string name;  ///< "x0", "x1", "e{i}", "t{i}_{j}"
  int source = 0;    ///< vertex index
  int target = 0;    ///< vertex index
};

class Quiver {
 public:
  explicit Quiver(const std::vector<int>& weights) {
    for (int m : weights)
      if (m < 2) throw InputError("every weight must be at least 2");
    if (weights.size() < 2)
      throw InputError("need at least two weighted points");

    vertices_.push_back(Vertex{"u", 0, 0});
    vertices_.push_back(Vertex{"v", 0, 0});
    const int r = static_cast<int>(weights.size());
    std::vector<std::vector<int>> chain(r);  // chain[i][k] = vertex of w_{i+1}^{m-1-k}
    for (int i = 0; i < r; ++i)
      for (int j = weights[i] - 1; j >= 1; --j) {
        chain[i].push_back(static_cast<int>(vertices_.size()));
        vertices_.push_back(Vertex{"w" + std::to_string(i + 1) + "_" + std::to_string(j),
                                   i + 1, j});
      }

    arrows_.push_back(Arrow{"x0", 0, 1});
    arrows_.push_back(Arrow{"x1", 0, 1});
    for (int i = 0; i < r; ++i) {
      arrows_.push_back(Arrow{"e" + std::to_string(i + 1), 1, chain[i].front()});
      for (std::size_t k = 0; k + 1 < chain[i].size(); ++k) {
        const int src = chain[i][k];      // w_i^{j+1}
        const int tgt = chain[i][k + 1];  // w_i^j
        arrows_.push_back(Arrow{"t" + std::to_string(i + 1) + "_" +
                                    std::to_string(vertices_[tgt].level),
                                src, tgt});
      }
    }
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  int vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (vertices_[i].name == name) return static_cast<int>(i);
    throw InputError("unknown vertex: " + name);
  }
  int arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
      if (arrows_[i].name == name) return static_cast<int>(i);
    throw InputError("unknown arrow: " + name);
  }

  /// Index of the chain vertex w_i^j (i is 1-based, 1 <= j <= m_i - 1).
  int chain_vertex(int i, int j) const {
    return vertex_index("w" + std::to_string(i) + "_" + std::to_string(j));
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Arrow> arrows_;
};

/// The quadratic relation (alpha x0 + beta x1) * e_i = 0 for branch i.
struct Relation {
  int branch = 0;  ///< 1-based branch index
  Rational alpha, beta;
};

inline std::vector<Relation> build_relations(const WeightedData& data) {
  data.validate();
  std::vector<Relation> rels;
  rels.reserve(data.lambda.size());
  for (std::size_t i = 0; i < data.lambda.size(); ++i) {
    const ProjPoint& p = data.lambda[i];
    rels.push_back(Relation{static_cast<int>(i) + 1, p.alpha(), p.beta()});
  }
  return rels;
}

}  // namespace orbik
