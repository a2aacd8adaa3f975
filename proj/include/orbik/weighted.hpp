#pragma once

/**
 * @file weighted.hpp
 * @brief Weighted branch data: points of the projective line with
 *        attached integer weights, plus a normalization constant.
 *
 * A WeightedData bundles r distinct points lambda_i = [alpha_i : beta_i]
 * of P^1, their weights m_i >= 2, and a positive integer N (the degree
 * unit for the degree formula; when the data comes from a lattice
 * quotient, N is the symmetry order and every m_i divides N).
 */

#include "orbik/lattice.hpp"
#include "orbik/rational.hpp"

#include <string>
#include <vector>

namespace orbik {

/// A point [alpha : beta] of the rational projective line, stored
/// canonically: (lambda, 1) for finite points, (1, 0) for infinity.
class ProjPoint {
 public:
  ProjPoint() : alpha_(0), beta_(1) {}

  ProjPoint(const Rational& alpha, const Rational& beta) {
    if (alpha == 0 && beta == 0)
      throw InputError("projective point needs a nonzero coordinate");
    if (beta == 0) {
      alpha_ = 1;
      beta_ = 0;
    } else {
      alpha_ = alpha / beta;
      beta_ = 1;
    }
  }

  static ProjPoint infinity() { return ProjPoint(Rational(1), Rational(0)); }
  static ProjPoint finite(const Rational& value) { return ProjPoint(value, Rational(1)); }

  bool is_infinity() const { return beta_ == 0; }
  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }

  friend bool operator==(const ProjPoint& p, const ProjPoint& q) {
    return p.alpha_ == q.alpha_ && p.beta_ == q.beta_;
  }
  friend bool operator!=(const ProjPoint& p, const ProjPoint& q) { return !(p == q); }

  std::string str() const {
    if (is_infinity()) return "inf";
    return format_rational(alpha_);
  }

 private:
  Rational alpha_, beta_;
};

struct WeightedData {
  std::vector<int> weights;       ///< m_1, ..., m_r, all >= 2
  std::vector<ProjPoint> lambda;  ///< r pairwise distinct points
  int N = 1;                      ///< positive degree unit

  int r() const { return static_cast<int>(weights.size()); }

  void validate() const {
    if (weights.size() < 2)
      throw InputError("need at least two weighted points");
    if (weights.size() != lambda.size())
      throw InputError("weights and lambda must have the same length");
    for (int m : weights)
      if (m < 2) throw InputError("every weight must be at least 2");
    if (N < 1) throw InputError("normalization constant must be positive");
    for (std::size_t i = 0; i < lambda.size(); ++i)
      for (std::size_t j = i + 1; j < lambda.size(); ++j)
        if (lambda[i] == lambda[j])
          throw InputError("branch points must be distinct");
  }
};

/**
 * Canonical weighted data of the order-m lattice quotient: weights are
 * the derived ramification multiplicities, N is the symmetry order, and
 * the branch points are normalized to (inf, 0, 1) -- with a fourth
 * point 2 in the order-2 case, the exact value of the normalized fourth
 * branch point at tau = i (see theta.hpp).
 */
inline WeightedData weighted_data_for_order(int order) {
  const LatticeSymmetry sym = make_symmetry(order);
  const RamificationDatum datum = derive_ramification(sym);

  WeightedData data;
  data.weights = datum.multiplicities();
  data.N = order;
  data.lambda = {ProjPoint::infinity(), ProjPoint::finite(Rational(0)),
                 ProjPoint::finite(Rational(1))};
  if (data.r() == 4) data.lambda.push_back(ProjPoint::finite(Rational(2)));
  if (static_cast<int>(data.lambda.size()) != data.r())
    throw CheckError("unsupported branch count " + std::to_string(data.r()));
  for (int m : data.weights)
    if (data.N % m != 0)
      throw CheckError("every multiplicity must divide the symmetry order");
  data.validate();
  return data;
}

}  // namespace orbik
