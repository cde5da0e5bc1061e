#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace omega {

/// Arbitrary-precision rational used for every structural check. Never overflows.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Scalar-specific helpers used by the HNum template.
template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& v) { return v == 0; }
  static bool is_finite(const Rational&) { return true; }
  static double to_double(const Rational& v) { return static_cast<double>(v); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double v) { return v == 0.0; }
  static bool is_finite(double v) { return std::isfinite(v); }
  static double to_double(double v) { return v; }
};

/// "3", "-1/2"
std::string to_string(const Rational& v);

/// Shortest text that round-trips to the same double.
std::string format_double(double v);

/// Exact value of a decimal literal such as "1.5708" or "2.5e-3".
Rational parse_decimal(std::string_view text);

/// Exact rational square root when `v` is the square of a rational; false otherwise.
bool rational_sqrt(const Rational& v, Rational& root);

}  // namespace omega
