#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "omega/hnum.hpp"

namespace omega {

enum class Boundary { periodic, dirichlet };

/// Samples of a wave on a uniform grid, h = (y_max - y_min) / (M - 1).
///
/// Periodic grids list one period without the repeated endpoint; Dirichlet grids
/// list interior nodes and treat the neighbours beyond both ends as zero.
class GridWave {
 public:
  /// Throws GridTooCoarse if M < 3, ArithmeticError if y_max <= y_min.
  GridWave(std::vector<FloatNum> values, double y_min, double y_max, Boundary boundary);

  /// M samples of f over one period starting at `start`.
  static GridWave periodic(const std::function<FloatNum(double)>& f, double start, double period, int m);
  /// M interior samples of f on the box (0, length).
  static GridWave dirichlet(const std::function<FloatNum(double)>& f, double length, int m);

  const std::vector<FloatNum>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double y_min() const noexcept { return y_min_; }
  double y_max() const noexcept { return y_max_; }
  double spacing() const noexcept { return (y_max_ - y_min_) / static_cast<double>(values_.size() - 1); }
  double position(std::size_t m) const { return y_min_ + spacing() * static_cast<double>(m); }
  Boundary boundary() const noexcept { return boundary_; }

 private:
  std::vector<FloatNum> values_;
  double y_min_;
  double y_max_;
  Boundary boundary_;
};

/// -(1/2) w'' by the central second difference (hbar = mass = 1).
GridWave hamiltonian_apply(const GridWave& w);

enum class EnergyClass { real, i_imaginary, k_proportional, mixed };
std::string_view energy_class_name(EnergyClass c);

struct EnergyValue {
  FloatNum value;
  EnergyClass classification = EnergyClass::real;
};

/// real / i_imaginary / k_proportional when only that coefficient exceeds tol, mixed otherwise.
/// Zero counts as real.
EnergyValue classify_energy(const FloatNum& e, double tol = 1e-10);

/// max_m |H w - E w| / max_m |w|, products in Omega. Throws ZeroWave for w == 0.
double eigencheck(const GridWave& w, const FloatNum& energy);
inline double eigencheck(const GridWave& w, const EnergyValue& energy) { return eigencheck(w, energy.value); }

/// Energy of a wave confined to one subalgebra, reported in that subalgebra's own
/// unity: c*1 for psi waves, c*k for phi waves, where c = <Hw, w> / <w, w>.
/// Throws MalformedSignal if the samples leave both subalgebras.
EnergyValue rayleigh_energy(const GridWave& w);

/// Lowest `levels` eigenvalues of the Dirichlet Hamiltonian on [0, L] with M interior
/// nodes. Throws ArithmeticError for levels < 1 and GridTooCoarse when M < 8 * levels.
std::vector<EnergyValue> box_spectrum(int levels, double length, int m);

/// Largest |Im| over the eigenvalues of the Dirichlet Hamiltonian as a general complex matrix.
double box_max_imaginary_part(double length, int m);

}  // namespace omega
