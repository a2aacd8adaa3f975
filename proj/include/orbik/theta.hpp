#pragma once

/**
 * @file theta.hpp
 * @brief Numeric branch points of the quotient curve via Jacobi theta
 *        constants.
 *
 * The degree-2 quotient of the torus C/(Z*tau + Z) is a projective line
 * branched over four points: infinity and the three half-period values
 * e1 = p(1/2), e2 = p((1+tau)/2), e3 = p(tau/2) of the Weierstrass
 * p-function.  These are classical theta-constant expressions in the
 * half-period nome qt = exp(i*pi*tau):
 *
 *     theta2 = 2 * sum_{n>=0} qt^{(n+1/2)^2}
 *     theta3 = 1 + 2 * sum_{n>=1} qt^{n^2}
 *     theta4 = 1 + 2 * sum_{n>=1} (-1)^n qt^{n^2}
 *
 *     e1 = (pi^2/3) * (theta3^4 + theta4^4)
 *     e2 = (pi^2/3) * (theta2^4 - theta4^4)
 *     e3 = -(pi^2/3) * (theta2^4 + theta3^4)
 *
 * so e1 + e2 + e3 = 0 identically.  At tau = i one has theta2 = theta4,
 * forcing e2 = 0 and e1 = -e3; the four branch points (inf, e1, 0, -e1)
 * then have cross-ratio exactly 2.  Quotients of higher order (3, 4, 6)
 * ramify over only three points, which can always be normalized to
 * (inf, 0, 1); no transcendental input is needed there.
 *
 * This is the single numeric corner of the library.  Series are summed
 * until the next term drops below tol/10 in absolute value.
 */

#include "orbik/rational.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace orbik {

/// A point of the projective line over C: either infinity or a finite value.
struct NumericPoint {
  bool infinite = false;
  std::complex<double> value{0.0, 0.0};

  static NumericPoint inf() { return NumericPoint{true, {0.0, 0.0}}; }
  static NumericPoint finite(std::complex<double> v) { return NumericPoint{false, v}; }

  std::string str() const {
    if (infinite) return "inf";
    return "(" + std::to_string(value.real()) + (value.imag() < 0 ? "" : "+") +
           std::to_string(value.imag()) + "i)";
  }
};

namespace detail {

/// qt^e = exp(i*pi*tau*e), evaluated without pow branch-cut surprises.
inline std::complex<double> nome_power(std::complex<double> tau, double e) {
  if (!(tau.imag() > 0))
    throw InputError("tau must lie in the upper half-plane");
  const double pi = 3.14159265358979323846;
  return std::exp(std::complex<double>(0.0, pi) * tau * e);
}

}  // namespace detail

/// theta2(tau) = 2 * sum qt^{(n+1/2)^2}.
inline std::complex<double> theta2_constant(std::complex<double> tau, double tol = 1e-8) {
  std::complex<double> s{0.0, 0.0};
  for (int n = 0;; ++n) {
    const std::complex<double> term = detail::nome_power(tau, (n + 0.5) * (n + 0.5));
    s += term;
    if (std::abs(term) < tol / 10.0) break;
  }
  return 2.0 * s;
}

/// theta3(tau) = 1 + 2 * sum qt^{n^2}.
inline std::complex<double> theta3_constant(std::complex<double> tau, double tol = 1e-8) {
  std::complex<double> s{0.0, 0.0};
  for (int n = 1;; ++n) {
    const std::complex<double> term = detail::nome_power(tau, static_cast<double>(n) * n);
    s += term;
    if (std::abs(term) < tol / 10.0) break;
  }
  return 1.0 + 2.0 * s;
}

/// theta4(tau) = 1 + 2 * sum (-1)^n qt^{n^2}.
inline std::complex<double> theta4_constant(std::complex<double> tau, double tol = 1e-8) {
  std::complex<double> s{0.0, 0.0};
  for (int n = 1;; ++n) {
    const std::complex<double> term =
        detail::nome_power(tau, static_cast<double>(n) * n) * (n % 2 == 0 ? 1.0 : -1.0);
    s += term;
    if (std::abs(term) < tol / 10.0) break;
  }
  return 1.0 + 2.0 * s;
}

/// Half-period values (e1, e2, e3); always sums to 0 up to rounding.
struct HalfPeriodValues {
  std::complex<double> e1, e2, e3;
};

inline HalfPeriodValues half_period_values(std::complex<double> tau, double tol = 1e-8) {
  const double pi = 3.14159265358979323846;
  const std::complex<double> t2 = theta2_constant(tau, tol);
  const std::complex<double> t3 = theta3_constant(tau, tol);
  const std::complex<double> t4 = theta4_constant(tau, tol);
  const auto p4 = [](std::complex<double> z) { return z * z * z * z; };
  const double c = pi * pi / 3.0;
  return HalfPeriodValues{c * (p4(t3) + p4(t4)),
                          c * (p4(t2) - p4(t4)),
                          -c * (p4(t2) + p4(t3))};
}

/**
 * Branch points of the order-m quotient of C/(Z*tau + Z).  Order 2 gives
 * (inf, e1, e2, e3); orders 3, 4, 6 give the normalized (inf, 0, 1).
 */
inline std::vector<NumericPoint> branch_points_numeric(int order,
                                                       std::complex<double> tau,
                                                       double tol = 1e-8) {
  switch (order) {
    case 2: {
      const HalfPeriodValues e = half_period_values(tau, tol);
      return {NumericPoint::inf(), NumericPoint::finite(e.e1),
              NumericPoint::finite(e.e2), NumericPoint::finite(e.e3)};
    }
    case 3:
    case 4:
    case 6:
      detail::nome_power(tau, 1.0);  // still validate the input
      return {NumericPoint::inf(), NumericPoint::finite({0.0, 0.0}),
              NumericPoint::finite({1.0, 0.0})};
    default:
      throw InputError("quotient order must be one of 2, 3, 4, 6");
  }
}

/**
 * Cross-ratio normalization for four branch points (inf, e1, e2, e3):
 * the Moebius map x -> (x - e1)/(e2 - e1) sends them to (inf, 0, 1, w)
 * with w returned here.  At tau = i this equals 2 up to rounding.
 */
inline std::complex<double> fourth_point_normalized(const HalfPeriodValues& e) {
  return (e.e3 - e.e1) / (e.e2 - e.e1);
}

}  // namespace orbik
