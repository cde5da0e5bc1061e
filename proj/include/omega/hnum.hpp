#pragma once

#include <array>
#include <cmath>
#include <ostream>
#include <string>

#include "omega/basis.hpp"
#include "omega/errors.hpp"
#include "omega/scalar.hpp"

namespace omega {

/// Hypercomplex number a*1 + b*i + c*j + d*k.
///
/// The coefficient mode is the template argument, so mixing exact and float
/// values is a compile error. Multiplication needs a table and lives on Algebra.
template <class Scalar>
class HNum {
 public:
  using scalar_type = Scalar;
  using Traits = ScalarTraits<Scalar>;

  HNum() : c_{Traits::zero(), Traits::zero(), Traits::zero(), Traits::zero()} {}
  HNum(Scalar a, Scalar b, Scalar c, Scalar d) : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}
  explicit HNum(const std::array<Scalar, kDim>& coefficients) : c_(coefficients) {}

  static HNum real(Scalar a) { return HNum(std::move(a), Traits::zero(), Traits::zero(), Traits::zero()); }
  static HNum unit(BasisIndex b, Scalar coefficient = Traits::one()) {
    HNum x;
    x.c_[b] = std::move(coefficient);
    return x;
  }
  static HNum from(SignedBasis e) { return unit(e.basis(), e.sign() < 0 ? -Traits::one() : Traits::one()); }

  const Scalar& operator[](std::size_t index) const { return c_[index]; }
  Scalar& operator[](std::size_t index) { return c_[index]; }
  const std::array<Scalar, kDim>& coefficients() const noexcept { return c_; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (!Traits::is_zero(v)) return false;
    return true;
  }
  bool is_finite() const {
    for (const auto& v : c_)
      if (!Traits::is_finite(v)) return false;
    return true;
  }

  HNum& operator+=(const HNum& o) {
    for (int n = 0; n < kDim; ++n) c_[n] += o.c_[n];
    return *this;
  }
  HNum& operator-=(const HNum& o) {
    for (int n = 0; n < kDim; ++n) c_[n] -= o.c_[n];
    return *this;
  }
  HNum& operator*=(const Scalar& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend HNum operator+(HNum x, const HNum& y) { return x += y; }
  friend HNum operator-(HNum x, const HNum& y) { return x -= y; }
  friend HNum operator*(HNum x, const Scalar& s) { return x *= s; }
  friend HNum operator*(const Scalar& s, HNum x) { return x *= s; }
  friend HNum operator-(HNum x) {
    for (auto& v : x.c_) v = -v;
    return x;
  }

  friend bool operator==(const HNum& x, const HNum& y) { return x.c_ == y.c_; }

 private:
  std::array<Scalar, kDim> c_;
};

using ExactNum = HNum<Rational>;
using FloatNum = HNum<double>;

enum class Conjugation { psi, phi, full };

/// psi negates the i coefficient; phi negates j and fixes k (complex conjugation
/// of span(j,k) about its unity k); full negates i, j and k.
template <class Scalar>
HNum<Scalar> conjugate(HNum<Scalar> x, Conjugation kind) {
  switch (kind) {
    case Conjugation::psi:
      x[1] = -x[1];
      break;
    case Conjugation::phi:
      x[2] = -x[2];
      break;
    case Conjugation::full:
      x[1] = -x[1];
      x[2] = -x[2];
      x[3] = -x[3];
      break;
  }
  return x;
}

/// Euclidean norm of the coefficient vector.
template <class Scalar>
double coefficient_norm(const HNum<Scalar>& x) {
  double sum = 0.0;
  for (const auto& v : x.coefficients()) {
    const double d = ScalarTraits<Scalar>::to_double(v);
    sum += d * d;
  }
  return std::sqrt(sum);
}

inline FloatNum to_float(const ExactNum& x) {
  return FloatNum(static_cast<double>(x[0]), static_cast<double>(x[1]), static_cast<double>(x[2]),
                  static_cast<double>(x[3]));
}

/// Absolute default tolerance for float-mode identity checks.
inline constexpr double kDefaultTolerance = 1e-12;

inline bool approx_equal(const FloatNum& x, const FloatNum& y, double tol = kDefaultTolerance) {
  return coefficient_norm(x - y) <= tol;
}

/// Human-readable form such as "1 - 2i + k" or "-k"; "0" for zero.
std::string format(const ExactNum& x);
std::string format(const FloatNum& x);

template <class Scalar>
std::ostream& operator<<(std::ostream& os, const HNum<Scalar>& x) {
  return os << format(x);
}

}  // namespace omega
