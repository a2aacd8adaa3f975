#include <catch2/catch_amalgamated.hpp>

#include "orbik/algebra.hpp"

using namespace orbik;

namespace {

WeightedData quadruple_data() {
  WeightedData d;
  d.weights = {2, 2, 2, 2};
  d.N = 2;
  d.lambda = {ProjPoint::infinity(), ProjPoint::finite(Rational(0)),
              ProjPoint::finite(Rational(1)), ProjPoint::finite(Rational(2))};
  return d;
}

WeightedData pair_data() {
  WeightedData d;
  d.weights = {2, 2};
  d.N = 2;
  d.lambda = {ProjPoint::infinity(), ProjPoint::finite(Rational(0))};
  return d;
}

int raw_path_total(const AlgebraBasis& basis) {
  const int n = static_cast<int>(basis.quiver().vertex_count());
  int total = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      total += static_cast<int>(basis.paths(a, b).size());
  return total;
}

}  // namespace

TEST_CASE("algebra dimension for the four-point weight-two case is 16") {
  AlgebraBasis basis(quadruple_data());
  CHECK(basis.total_dimension() == 16);
  // The relations genuinely cut the path space down.
  CHECK(raw_path_total(basis) == 20);
}

TEST_CASE("algebra dimension for the two-point weight-two case is 10") {
  AlgebraBasis basis(pair_data());
  CHECK(basis.total_dimension() == 10);
  CHECK(raw_path_total(basis) == 12);
}

TEST_CASE("algebra dimensions for the remaining symmetry orders") {
  // Trivial paths, the doubled arrow, two path families per chain slot,
  // and the internal chain composites:
  //   dim = V + 2 + sum_i [2(m_i - 1) + (m_i - 1)(m_i - 2)/2].
  CHECK(AlgebraBasis(weighted_data_for_order(3)).total_dimension() == 25);
  CHECK(AlgebraBasis(weighted_data_for_order(4)).total_dimension() == 31);
  CHECK(AlgebraBasis(weighted_data_for_order(6)).total_dimension() == 39);
}

TEST_CASE("graded pieces: trivial paths, doubled arrow, one surviving path per chain slot") {
  AlgebraBasis basis(AlgebraBasis(weighted_data_for_order(6)));
  const Quiver& q = basis.quiver();
  const int n = static_cast<int>(q.vertex_count());
  const int u = q.vertex_index("u");
  const int v = q.vertex_index("v");

  for (int a = 0; a < n; ++a) CHECK(basis.dimension(a, a) == 1);
  CHECK(basis.dimension(u, v) == 2);
  CHECK(basis.dimension(v, u) == 0);
  for (int b = 2; b < n; ++b) {
    CHECK(basis.dimension(u, b) == 1);   // two raw paths, one relation
    CHECK(basis.paths(u, b).size() == 2);
    CHECK(basis.dimension(v, b) == 1);
  }
  // Chain pieces: w_i^j reaches w_i^{j'} exactly when j' <= j.
  const int top = q.vertex_index("w3_5");
  const int bottom = q.vertex_index("w3_1");
  CHECK(basis.dimension(top, bottom) == 1);
  CHECK(basis.dimension(bottom, top) == 0);
  CHECK(basis.dimension(q.vertex_index("w2_1"), q.vertex_index("w3_1")) == 0);
}

TEST_CASE("Cartan matrix is upper unitriangular with the frozen shape") {
  AlgebraBasis basis(quadruple_data());
  const QMatrix c = basis.cartan();
  const QMatrix expected{{1, 2, 1, 1, 1, 1}, {0, 1, 1, 1, 1, 1},
                         {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0},
                         {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}};
  CHECK(c == expected);
}

TEST_CASE("Cartan matrices stay unitriangular across all symmetry orders") {
  for (int order : {2, 3, 4, 6}) {
    AlgebraBasis basis(weighted_data_for_order(order));
    const QMatrix c = basis.cartan();
    for (std::size_t i = 0; i < c.rows(); ++i) {
      CHECK(c.at(i, i) == 1);
      for (std::size_t j = 0; j < i; ++j) CHECK(c.at(i, j) == 0);
    }
  }
}

TEST_CASE("the defining relations reduce to zero") {
  WeightedData d = pair_data();
  AlgebraBasis basis(d);
  const Quiver& q = basis.quiver();
  const int u = q.vertex_index("u");
  const std::vector<Relation> rels = build_relations(d);
  for (const Relation& rel : rels) {
    const int b = q.chain_vertex(rel.branch, d.weights[static_cast<std::size_t>(rel.branch - 1)] - 1);
    const auto& paths = basis.paths(u, b);
    REQUIRE(paths.size() == 2);
    std::vector<Rational> raw(2, Rational(0));
    // Paths are enumerated with x0 before x1.
    raw[0] = rel.alpha;
    raw[1] = rel.beta;
    const std::vector<Rational> reduced = basis.reduce(u, b, raw);
    for (const Rational& c : reduced) CHECK(c == 0);
  }
}

TEST_CASE("right multiplication kills exactly the related composite") {
  AlgebraBasis basis(pair_data());
  const Quiver& q = basis.quiver();
  const int u = q.vertex_index("u");
  const int v = q.vertex_index("v");
  const int x0 = q.arrow_index("x0");
  const int x1 = q.arrow_index("x1");
  const int e1 = q.arrow_index("e1");
  const int e2 = q.arrow_index("e2");

  // Trivial path at u times x0 = the first basis path of (u, v).
  const std::vector<Rational> p0 = basis.right_multiply(u, u, 0, x0);
  CHECK(p0 == std::vector<Rational>{Rational(1), Rational(0)});
  const std::vector<Rational> p1 = basis.right_multiply(u, u, 0, x1);
  CHECK(p1 == std::vector<Rational>{Rational(0), Rational(1)});

  // Branch 1 has the point at infinity: x0 e1 = 0, x1 e1 survives.
  CHECK(basis.right_multiply(u, v, 0, e1) == std::vector<Rational>{Rational(0)});
  CHECK(basis.right_multiply(u, v, 1, e1) == std::vector<Rational>{Rational(1)});
  // Branch 2 has lambda = 0: x1 e2 = 0, x0 e2 survives.
  CHECK(basis.right_multiply(u, v, 0, e2) == std::vector<Rational>{Rational(1)});
  CHECK(basis.right_multiply(u, v, 1, e2) == std::vector<Rational>{Rational(0)});
}

TEST_CASE("a generic finite branch point folds both composites together") {
  WeightedData d = pair_data();
  d.lambda[0] = ProjPoint::finite(Rational(5, 3));
  AlgebraBasis basis(d);
  const Quiver& q = basis.quiver();
  const int u = q.vertex_index("u");
  const int v = q.vertex_index("v");
  const int e1 = q.arrow_index("e1");
  // Relation (5/3) x0 e1 + x1 e1 = 0, so x0 e1 reduces to -(3/5) x1 e1.
  const auto& surv = basis.surviving(u, q.arrows()[static_cast<std::size_t>(e1)].target);
  REQUIRE(surv.size() == 1);
  CHECK(surv[0] == 1);  // the x1-composite is the surviving path
  CHECK(basis.right_multiply(u, v, 0, e1) ==
        std::vector<Rational>{Rational(-3, 5)});
  CHECK(basis.right_multiply(u, v, 1, e1) == std::vector<Rational>{Rational(1)});
}

TEST_CASE("coincident branch points are rejected at construction") {
  WeightedData d = pair_data();
  d.lambda[1] = ProjPoint::infinity();
  CHECK_THROWS_WITH(AlgebraBasis(d), "branch points must be distinct");
}
