#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalar type and parsing/formatting helpers.
 *
 * All linear algebra in this library runs over the rationals (or a
 * quadratic extension, see quadratic.hpp).  We use arbitrary-precision
 * integers underneath so intermediate results of Gaussian elimination
 * and path-algebra reductions can never overflow.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbik {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown for malformed user input (files, CLI arguments, text fields).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a mathematical invariant the library guarantees fails to hold.
class CheckError : public std::runtime_error {
 public:
  explicit CheckError(const std::string& what) : std::runtime_error(what) {}
};

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw InputError("rational with zero denominator");
  return Rational(Integer(num), Integer(den));
}

/// Parse "p" or "p/q" with optional sign; q must be nonzero.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty())
      throw InputError("malformed rational literal: " + text);
    Integer d(den);
    if (d == 0) throw InputError("rational with zero denominator: " + text);
    return Rational(Integer(num), d);
  } catch (const std::runtime_error& e) {
    // cpp_int's own parse failure carries no context; re-wrap uniformly.
    throw InputError(std::string("malformed rational literal: ") + text);
  }
}

/// Format as "p" when integral, else "p/q" in lowest terms.
inline std::string format_rational(const Rational& x) {
  const Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline bool is_integer(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

/// Exact floor of a rational (round toward -infinity).
inline Integer rational_floor(const Rational& x) {
  const Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);  // den > 0
  Integer q = num / den;                                      // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

/// Exact reduction of x into [0, 1): x - floor(x).
inline Rational mod_one(const Rational& x) {
  return x - Rational(rational_floor(x));
}

}  // namespace orbik
