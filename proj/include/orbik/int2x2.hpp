#pragma once

/**
 * @file int2x2.hpp
 * @brief Integer 2x2 matrices acting on a rank-2 lattice, plus the 2x2
 *        Smith normal form.
 *
 * The lattice side of the library only ever needs 2x2 integer matrices
 * (symmetry generators and g - 1), so this is deliberately small and
 * uses plain 64-bit integers: all entries that occur are single digits.
 *
 * Column convention: a lattice vector v = m*tau + n is stored as the
 * column (m, n)^T and matrices act from the left.
 */

#include "orbik/rational.hpp"

#include <array>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace orbik {

struct Mat2 {
  // Row-major entries: [[a, b], [c, d]].
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static Mat2 identity() { return Mat2{1, 0, 0, 1}; }

  std::int64_t det() const { return a * d - b * c; }
  std::int64_t trace() const { return a + d; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return Mat2{x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

  Mat2 pow(unsigned k) const {
    Mat2 r = identity();
    for (unsigned i = 0; i < k; ++i) r = r * (*this);
    return r;
  }

  /// Inverse of a unimodular matrix (det must be +/-1).
  Mat2 inverse_unimodular() const {
    const std::int64_t dt = det();
    if (dt != 1 && dt != -1)
      throw CheckError("inverse_unimodular: determinant is not a unit");
    return Mat2{dt * d, -dt * b, -dt * c, dt * a};
  }

  Mat2 transpose() const { return Mat2{a, c, b, d}; }

  std::string str() const {
    return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
           std::to_string(c) + "," + std::to_string(d) + "]]";
  }
};

/// U * A * V = D with U, V unimodular and D = diag(d1, d2), d1 | d2, di >= 0.
struct Smith2 {
  Mat2 u, v;
  std::int64_t d1 = 0, d2 = 0;
};

inline Smith2 smith_form(const Mat2& input) {
  Mat2 m = input;
  Mat2 u = Mat2::identity();
  Mat2 v = Mat2::identity();

  const auto row_swap = [&] {
    std::swap(m.a, m.c);
    std::swap(m.b, m.d);
    std::swap(u.a, u.c);
    std::swap(u.b, u.d);
  };
  const auto col_swap = [&] {
    std::swap(m.a, m.b);
    std::swap(m.c, m.d);
    std::swap(v.a, v.b);
    std::swap(v.c, v.d);
  };
  // row1 -= q * row0 / col1 -= q * col0 (and the index-0 variants).
  const auto row_op = [&](std::int64_t q) {  // row1 -= q*row0
    m.c -= q * m.a;
    m.d -= q * m.b;
    u.c -= q * u.a;
    u.d -= q * u.b;
  };
  const auto col_op = [&](std::int64_t q) {  // col1 -= q*col0
    m.b -= q * m.a;
    m.d -= q * m.c;
    v.b -= q * v.a;
    v.d -= q * v.c;
  };
  const auto col_add_first = [&] {  // col0 += col1
    m.a += m.b;
    m.c += m.d;
    v.a += v.b;
    v.c += v.d;
  };

  if (m.a == 0 && m.b == 0 && m.c == 0 && m.d == 0)
    return Smith2{u, v, 0, 0};

  // Bring a nonzero entry to the corner, then alternate Euclidean row and
  // column passes until the first row and column are clear.
  for (;;) {
    if (m.a == 0) {
      if (m.c != 0) row_swap();
      else if (m.b != 0) col_swap();
      else {  // only m.d nonzero
        row_swap();
        col_swap();
      }
    }
    while (m.c != 0) {
      const std::int64_t q = m.c / m.a;
      row_op(q);
      if (m.c != 0) row_swap();
    }
    while (m.b != 0) {
      const std::int64_t q = m.b / m.a;
      col_op(q);
      if (m.b != 0) col_swap();
    }
    if (m.b == 0 && m.c == 0) {
      if (m.d % m.a != 0) {
        col_add_first();  // reintroduces work, forces divisibility next pass
        continue;
      }
      break;
    }
  }

  if (m.a < 0) {  // scale row0 by -1 (unimodular)
    m.a = -m.a;
    m.b = -m.b;
    u.a = -u.a;
    u.b = -u.b;
  }
  if (m.d < 0) {
    m.d = -m.d;
    u.c = -u.c;
    u.d = -u.d;
  }
  return Smith2{u, v, m.a, m.d};
}

}  // namespace orbik
