#include "omega/analytic.hpp"

#include <algorithm>
#include <numbers>

namespace omega {

void SeriesConfig::validate() const {
  if (!(tol > 0.0)) throw ArithmeticError("series tolerance must be positive");
  if (max_terms < 1) throw ArithmeticError("series max_terms must be at least 1");
}

namespace {

const Algebra& omega_algebra() {
  static const Algebra alg = Algebra::omega();
  return alg;
}

}  // namespace

FloatNum exp(const Algebra& alg, const FloatNum& x, const SeriesConfig& cfg) {
  cfg.validate();
  if (!x.is_finite()) throw ArithmeticError("exp of a non-finite value");
  FloatNum term = FloatNum::real(1.0);
  FloatNum sum = term;
  for (int n = 1; n < cfg.max_terms; ++n) {
    term = alg.mul(term, x);
    term *= 1.0 / static_cast<double>(n);
    sum += term;
    if (coefficient_norm(term) < cfg.tol) return sum;
  }
  throw NoConvergence("exp series did not reach tolerance within " + std::to_string(cfg.max_terms) + " terms");
}

FloatNum sin(const Algebra& alg, const FloatNum& x, const SeriesConfig& cfg) {
  cfg.validate();
  FloatNum sum = x;
  FloatNum term = x;
  const FloatNum x2 = alg.mul(x, x);
  int order = 1;
  for (int n = 1; n < cfg.max_terms; ++n) {
    if (coefficient_norm(term) < cfg.tol) return sum;
    term = alg.mul(term, x2);
    term *= -1.0 / (static_cast<double>(order + 1) * static_cast<double>(order + 2));
    order += 2;
    sum += term;
  }
  if (coefficient_norm(term) < cfg.tol) return sum;
  throw NoConvergence("sin series did not reach tolerance within " + std::to_string(cfg.max_terms) + " terms");
}

FloatNum cos(const Algebra& alg, const FloatNum& x, const SeriesConfig& cfg) {
  cfg.validate();
  FloatNum term = FloatNum::real(1.0);
  FloatNum sum = term;
  const FloatNum x2 = alg.mul(x, x);
  int order = 0;
  for (int n = 1; n < cfg.max_terms; ++n) {
    term = alg.mul(term, x2);
    term *= -1.0 / (static_cast<double>(order + 1) * static_cast<double>(order + 2));
    order += 2;
    sum += term;
    if (coefficient_norm(term) < cfg.tol) return sum;
  }
  throw NoConvergence("cos series did not reach tolerance within " + std::to_string(cfg.max_terms) + " terms");
}

FloatNum phi_wave(double y, WaveExponent exponent, const SeriesConfig& cfg) {
  const Algebra& alg = omega_algebra();
  const BasisIndex unit = exponent == WaveExponent::j ? 2 : 1;
  return alg.mul(FloatNum::unit(3, 1.0), exp(alg, FloatNum::unit(unit, y), cfg));
}

double verify_coupling_identity(double x, double y, CouplingReading reading, const SeriesConfig& cfg) {
  const Algebra& alg = omega_algebra();
  const FloatNum psi_factor = exp(alg, FloatNum::unit(1, x), cfg);
  if (reading == CouplingReading::consistent) {
    const FloatNum lhs = alg.mul(psi_factor, phi_wave(y, WaveExponent::j, cfg));
    return coefficient_norm(lhs - phi_wave(x + y, WaveExponent::j, cfg));
  }
  const FloatNum lhs = alg.mul(psi_factor, phi_wave(y, WaveExponent::i, cfg));
  const FloatNum exponent = alg.mul(FloatNum::unit(2, 1.0), FloatNum(x, y, 0.0, 0.0));
  const FloatNum rhs = alg.mul(FloatNum::unit(3, 1.0), exp(alg, exponent, cfg));
  return coefficient_norm(lhs - rhs);
}

double coupling_grid_max_residual(int n, double span, CouplingReading reading, const SeriesConfig& cfg) {
  if (n < 2) throw ArithmeticError("coupling grid needs at least 2 points per axis");
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const double x = span * a / (n - 1);
      const double y = span * b / (n - 1);
      worst = std::max(worst, verify_coupling_identity(x, y, reading, cfg));
    }
  return worst;
}

}  // namespace omega
