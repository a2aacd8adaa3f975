#pragma once

/**
 * @file quadratic.hpp
 * @brief Exact arithmetic in Q, Q(i) and Q(sqrt(-3)).
 *
 * A QuadraticScalar stores a + b*w where w is the field generator:
 *
 *   - NumberField::rational    w is absent (b must stay 0)
 *   - NumberField::gauss       w = i,        w^2 = -1
 *   - NumberField::eisenstein  w = sqrt(-3), w^2 = -3
 *
 * These three fields cover every scalar the lattice computations need:
 * the square lattice Z[i] and the hexagonal lattice Z[zeta_6] both embed
 * here, with zeta_6 = (1 + sqrt(-3))/2 and zeta_3 = (-1 + sqrt(-3))/2.
 *
 * Arithmetic between different proper extensions is refused loudly:
 * silently coercing Q(i) into Q(sqrt(-3)) would corrupt a computation.
 * Values tagged `rational` promote into either extension.
 */

#include "orbik/rational.hpp"

#include <string>

namespace orbik {

enum class NumberField { rational, gauss, eisenstein };

inline std::string field_name(NumberField f) {
  switch (f) {
    case NumberField::rational:   return "rational";
    case NumberField::gauss:      return "gauss";
    case NumberField::eisenstein: return "eisenstein";
  }
  return "?";
}

/// w^2 as a rational constant (0 stands in for "no generator").
inline Rational generator_square(NumberField f) {
  switch (f) {
    case NumberField::rational:   return Rational(0);
    case NumberField::gauss:      return Rational(-1);
    case NumberField::eisenstein: return Rational(-3);
  }
  return Rational(0);
}

class QuadraticScalar {
 public:
  QuadraticScalar() : field_(NumberField::rational), a_(0), b_(0) {}

  /*implicit*/ QuadraticScalar(const Rational& a)
      : field_(NumberField::rational), a_(a), b_(0) {}

  /*implicit*/ QuadraticScalar(long long a)
      : field_(NumberField::rational), a_(a), b_(0) {}

  QuadraticScalar(NumberField field, Rational a, Rational b)
      : field_(field), a_(std::move(a)), b_(std::move(b)) {
    if (field_ == NumberField::rational && b_ != 0)
      throw InputError("rational scalar with nonzero generator part");
    normalize();
  }

  NumberField field() const { return field_; }
  const Rational& re() const { return a_; }   ///< coefficient of 1
  const Rational& im() const { return b_; }   ///< coefficient of w

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  static QuadraticScalar i() {
    return QuadraticScalar(NumberField::gauss, Rational(0), Rational(1));
  }
  /// sqrt(-3) itself.
  static QuadraticScalar root_minus_three() {
    return QuadraticScalar(NumberField::eisenstein, Rational(0), Rational(1));
  }
  /// Primitive 6th root of unity, (1 + sqrt(-3))/2.
  static QuadraticScalar zeta6() {
    return QuadraticScalar(NumberField::eisenstein, Rational(1, 2), Rational(1, 2));
  }
  /// Primitive cube root of unity, (-1 + sqrt(-3))/2.
  static QuadraticScalar zeta3() {
    return QuadraticScalar(NumberField::eisenstein, Rational(-1, 2), Rational(1, 2));
  }

  QuadraticScalar conj() const {
    return QuadraticScalar(field_, a_, -b_);
  }

  /// Field norm (a + b*w)(a - b*w) = a^2 - b^2 * w^2, a nonneg rational.
  Rational norm() const {
    return a_ * a_ - b_ * b_ * generator_square(field_);
  }

  friend QuadraticScalar operator+(const QuadraticScalar& x, const QuadraticScalar& y) {
    const NumberField f = merge_fields(x, y, "+");
    return QuadraticScalar(f, x.a_ + y.a_, x.b_ + y.b_);
  }
  friend QuadraticScalar operator-(const QuadraticScalar& x, const QuadraticScalar& y) {
    const NumberField f = merge_fields(x, y, "-");
    return QuadraticScalar(f, x.a_ - y.a_, x.b_ - y.b_);
  }
  friend QuadraticScalar operator-(const QuadraticScalar& x) {
    return QuadraticScalar(x.field_, -x.a_, -x.b_);
  }
  friend QuadraticScalar operator*(const QuadraticScalar& x, const QuadraticScalar& y) {
    const NumberField f = merge_fields(x, y, "*");
    const Rational w2 = generator_square(f);
    return QuadraticScalar(f,
                           x.a_ * y.a_ + x.b_ * y.b_ * w2,
                           x.a_ * y.b_ + x.b_ * y.a_);
  }
  friend QuadraticScalar operator/(const QuadraticScalar& x, const QuadraticScalar& y) {
    if (y.is_zero()) throw CheckError("division by zero scalar");
    const NumberField f = merge_fields(x, y, "/");
    const QuadraticScalar yc(f, y.a_, -y.b_);
    const Rational n = y.norm();
    const QuadraticScalar p = QuadraticScalar(f, x.a_, x.b_) * yc;
    return QuadraticScalar(f, p.a_ / n, p.b_ / n);
  }

  QuadraticScalar& operator+=(const QuadraticScalar& y) { return *this = *this + y; }
  QuadraticScalar& operator-=(const QuadraticScalar& y) { return *this = *this - y; }
  QuadraticScalar& operator*=(const QuadraticScalar& y) { return *this = *this * y; }
  QuadraticScalar& operator/=(const QuadraticScalar& y) { return *this = *this / y; }

  friend bool operator==(const QuadraticScalar& x, const QuadraticScalar& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    // Equal pairs: fields may only differ when both values are rational.
    return x.field_ == y.field_ || (x.b_ == 0 && y.b_ == 0);
  }
  friend bool operator!=(const QuadraticScalar& x, const QuadraticScalar& y) {
    return !(x == y);
  }

  /// Canonical text form: "a", "b*w", or "a+b*w" with w in {i, sqrt(-3)}.
  std::string str() const {
    if (b_ == 0) return format_rational(a_);
    const std::string w = (field_ == NumberField::gauss) ? "i" : "sqrt(-3)";
    std::string bs;
    if (b_ == 1) bs = w;
    else if (b_ == -1) bs = "-" + w;
    else bs = format_rational(b_) + "*" + w;
    if (a_ == 0) return bs;
    if (b_ > 0) return format_rational(a_) + "+" + bs;
    return format_rational(a_) + bs;  // bs already carries the minus sign
  }

 private:
  void normalize() {
    if (b_ == 0 && field_ != NumberField::rational) {
      // Keep the tag: a Gaussian 0 stays Gaussian so containers stay
      // homogeneous.  Equality treats rational values across tags as equal.
    }
  }

  static NumberField merge_fields(const QuadraticScalar& x,
                                  const QuadraticScalar& y,
                                  const char* op) {
    if (x.field_ == y.field_) return x.field_;
    if (x.field_ == NumberField::rational) return y.field_;
    if (y.field_ == NumberField::rational) return x.field_;
    throw CheckError(std::string("scalar field mismatch in '") + op +
                     "': " + field_name(x.field_) + " vs " + field_name(y.field_));
  }

  NumberField field_;
  Rational a_, b_;
};

}  // namespace orbik
