#include "omega/schrodinger.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "omega/algebra.hpp"
#include "omega/spectral.hpp"

namespace omega {

namespace {

const Algebra& omega_algebra() {
  static const Algebra alg = Algebra::omega();
  return alg;
}

constexpr int kMinPoints = 3;

}  // namespace

GridWave::GridWave(std::vector<FloatNum> values, double y_min, double y_max, Boundary boundary)
    : values_(std::move(values)), y_min_(y_min), y_max_(y_max), boundary_(boundary) {
  if (values_.size() < kMinPoints)
    throw GridTooCoarse("grid needs at least 3 points, got " + std::to_string(values_.size()));
  if (!(y_max_ > y_min_)) throw ArithmeticError("grid domain must satisfy y_min < y_max");
}

GridWave GridWave::periodic(const std::function<FloatNum(double)>& f, double start, double period, int m) {
  if (m < kMinPoints) throw GridTooCoarse("grid needs at least 3 points, got " + std::to_string(m));
  const double h = period / m;
  std::vector<FloatNum> values;
  values.reserve(m);
  for (int n = 0; n < m; ++n) values.push_back(f(start + h * n));
  return GridWave(std::move(values), start, start + h * (m - 1), Boundary::periodic);
}

GridWave GridWave::dirichlet(const std::function<FloatNum(double)>& f, double length, int m) {
  if (m < kMinPoints) throw GridTooCoarse("grid needs at least 3 points, got " + std::to_string(m));
  const double h = length / (m + 1);
  std::vector<FloatNum> values;
  values.reserve(m);
  for (int n = 1; n <= m; ++n) values.push_back(f(h * n));
  return GridWave(std::move(values), h, h * m, Boundary::dirichlet);
}

GridWave hamiltonian_apply(const GridWave& w) {
  const auto& v = w.values();
  const std::size_t m = v.size();
  const double h = w.spacing();
  const double scale = -0.5 / (h * h);
  const bool periodic = w.boundary() == Boundary::periodic;
  std::vector<FloatNum> out(m);
#pragma omp parallel for schedule(static) if (m > 4096)
  for (std::int64_t n = 0; n < static_cast<std::int64_t>(m); ++n) {
    const std::size_t idx = static_cast<std::size_t>(n);
    FloatNum left, right;
    if (idx > 0)
      left = v[idx - 1];
    else if (periodic)
      left = v[m - 1];
    if (idx + 1 < m)
      right = v[idx + 1];
    else if (periodic)
      right = v[0];
    FloatNum d2 = left + right - v[idx] * 2.0;
    out[idx] = d2 * scale;
  }
  return GridWave(std::move(out), w.y_min(), w.y_max(), w.boundary());
}

std::string_view energy_class_name(EnergyClass c) {
  switch (c) {
    case EnergyClass::real:
      return "real";
    case EnergyClass::i_imaginary:
      return "i_imaginary";
    case EnergyClass::k_proportional:
      return "k_proportional";
    case EnergyClass::mixed:
      return "mixed";
  }
  return "mixed";
}

EnergyValue classify_energy(const FloatNum& e, double tol) {
  std::array<bool, kDim> nonzero{};
  int count = 0;
  for (int b = 0; b < kDim; ++b) {
    nonzero[b] = std::abs(e[b]) > tol;
    count += nonzero[b] ? 1 : 0;
  }
  EnergyClass c = EnergyClass::mixed;
  if (count == 0 || (count == 1 && nonzero[0]))
    c = EnergyClass::real;
  else if (count == 1 && nonzero[1])
    c = EnergyClass::i_imaginary;
  else if (count == 1 && nonzero[3])
    c = EnergyClass::k_proportional;
  return {e, c};
}

double eigencheck(const GridWave& w, const FloatNum& energy) {
  double scale = 0.0;
  for (const auto& v : w.values()) scale = std::max(scale, coefficient_norm(v));
  if (scale == 0.0) throw ZeroWave("eigencheck on an identically zero wave");
  const GridWave hw = hamiltonian_apply(w);
  const Algebra& alg = omega_algebra();
  double worst = 0.0;
  for (std::size_t n = 0; n < w.size(); ++n)
    worst = std::max(worst, coefficient_norm(hw.values()[n] - alg.mul(energy, w.values()[n])));
  return worst / scale;
}

EnergyValue rayleigh_energy(const GridWave& w) {
  bool phi = true;
  bool psi = true;
  for (const auto& v : w.values()) {
    phi = phi && v[0] == 0.0 && v[1] == 0.0;
    psi = psi && v[2] == 0.0 && v[3] == 0.0;
  }
  if (!phi && !psi) throw MalformedSignal("Rayleigh energy needs a wave inside psi or phi");
  const SignalKind kind = phi ? SignalKind::phi : SignalKind::psi;
  const GridWave hw = hamiltonian_apply(w);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t n = 0; n < w.size(); ++n) {
    num += inner_product(kind, hw.values()[n], w.values()[n]);
    den += inner_product(kind, w.values()[n], w.values()[n]);
  }
  if (den == 0.0) throw ZeroWave("Rayleigh energy of an identically zero wave");
  const double c = num / den;
  return classify_energy(phi ? FloatNum::unit(3, c) : FloatNum::real(c));
}

std::vector<EnergyValue> box_spectrum(int levels, double length, int m) {
  if (levels < 1) throw ArithmeticError("box_spectrum needs at least one level");
  if (m < 8 * levels)
    throw GridTooCoarse("box_spectrum needs M >= 8 * levels (M = " + std::to_string(m) + ")");
  if (!(length > 0.0)) throw ArithmeticError("box length must be positive");
  const double h = length / (m + 1);
  Eigen::VectorXd diag = Eigen::VectorXd::Constant(m, 1.0 / (h * h));
  Eigen::VectorXd off = Eigen::VectorXd::Constant(m - 1, -0.5 / (h * h));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ArithmeticError("tridiagonal eigensolver failed");
  std::vector<EnergyValue> out;
  for (int n = 0; n < levels; ++n) out.push_back(classify_energy(FloatNum::real(solver.eigenvalues()[n])));
  return out;
}

double box_max_imaginary_part(double length, int m) {
  if (m < kMinPoints) throw GridTooCoarse("grid needs at least 3 points");
  const double h = length / (m + 1);
  Eigen::MatrixXcd ham = Eigen::MatrixXcd::Zero(m, m);
  for (int n = 0; n < m; ++n) {
    ham(n, n) = 1.0 / (h * h);
    if (n + 1 < m) {
      ham(n, n + 1) = -0.5 / (h * h);
      ham(n + 1, n) = -0.5 / (h * h);
    }
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(ham, false);
  if (solver.info() != Eigen::Success) throw ArithmeticError("complex eigensolver failed");
  return solver.eigenvalues().imag().cwiseAbs().maxCoeff();
}

}  // namespace omega
