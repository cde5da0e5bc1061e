#pragma once

#include "omega/algebra.hpp"

namespace omega {

/// Truncation control for power series: stop once a term's coefficient norm drops below tol.
struct SeriesConfig {
  double tol = 1e-13;
  int max_terms = 200;

  /// Throws ArithmeticError unless tol > 0 and max_terms >= 1.
  void validate() const;
};

/// x^n by square-and-multiply. Refuses n > 2 on non-associative tables (ambiguous bracketing).
template <class Scalar>
HNum<Scalar> power(const Algebra& alg, const HNum<Scalar>& x, unsigned n) {
  if (n > 2 && !alg.properties().associative)
    throw ArithmeticError("power " + std::to_string(n) + " is ambiguous in non-associative " + alg.name());
  HNum<Scalar> result = HNum<Scalar>::real(ScalarTraits<Scalar>::one());
  HNum<Scalar> base = x;
  while (n > 0) {
    if (n & 1U) result = alg.mul(result, base);
    n >>= 1U;
    if (n > 0) base = alg.mul(base, base);
  }
  return result;
}

/// Partial sums of sum x^n / n!. Throws NoConvergence when max_terms is exhausted.
FloatNum exp(const Algebra& alg, const FloatNum& x, const SeriesConfig& cfg = {});
FloatNum sin(const Algebra& alg, const FloatNum& x, const SeriesConfig& cfg = {});
FloatNum cos(const Algebra& alg, const FloatNum& x, const SeriesConfig& cfg = {});

/// Which unit appears in the exponent of the wave q(y) = k * e^{u y}.
/// In Omega k*i = k*j = j, so both readings produce the same wave.
enum class WaveExponent { j, i };

/// q(y) = k * exp(u y) in Omega; equals k cos y + j sin y.
FloatNum phi_wave(double y, WaveExponent exponent = WaveExponent::j, const SeriesConfig& cfg = {});

/// Readings of the psi/phi coupling identity.
///  - consistent: e^{i x} * (k e^{j y})  vs  k e^{j (x + y)}
///  - mixed:      e^{i x} * (k e^{i y})  vs  k e^{j (x + i y)}
enum class CouplingReading { consistent, mixed };

/// Coefficient norm of the difference between both sides of the coupling identity.
double verify_coupling_identity(double x, double y, CouplingReading reading = CouplingReading::consistent,
                                const SeriesConfig& cfg = {});

/// Largest residual of the identity over an n x n grid on [0, span]^2 (endpoints included).
double coupling_grid_max_residual(int n, double span, CouplingReading reading = CouplingReading::consistent,
                                  const SeriesConfig& cfg = {});

}  // namespace omega
