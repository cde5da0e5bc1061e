#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "omega/hnum.hpp"

namespace omega {

/// Two-path interference whose second path picks up the psi phase induced by a phi drift.
struct CouplingConfig {
  double delta = 0.0;   // phi-phase drift (radians)
  double theta1 = 0.0;  // base phase of path 1
  double theta2 = 0.0;  // base phase of path 2
  std::uint64_t samples = 10000;
  std::uint64_t rng_seed = 0;
  std::uint64_t batch_size = 1000;  // granularity of the per-batch counts

  void validate() const;
};

/// The psi phase delta' with e^{i delta'} * q(y0) = q(y0 + delta), read off through the
/// phi inner product and the phi -> psi isomorphism. Result in (-pi, pi].
double induced_psi_phase(double delta, double reference_phase = 0.0);

/// |(e^{i theta1} + e^{i (theta2 + delta')}) / 2|^2, evaluated with psi conjugation in Omega.
double modulated_probability(const CouplingConfig& cfg);

struct ExperimentResult {
  std::array<std::uint64_t, 2> counts{};  // [0] = outcome 0, [1] = outcome 1 (probability p)
  double probability = 0.0;               // modulated probability of outcome 1
  double expected_probability = 0.0;      // null (delta = 0) probability
  std::optional<double> chi_square;       // absent when the null is degenerate
  std::optional<double> p_value;
  bool degenerate = false;
  std::vector<std::array<std::uint64_t, 2>> batch_counts;
};

/// Seeded Bernoulli draws and a 1-dof chi-square test against the delta = 0 expectation.
/// A null probability of 0 or 1 leaves chi_square/p_value empty and sets `degenerate`.
ExperimentResult run_experiment(const CouplingConfig& cfg);

/// Independent experiments, one generator each, run in parallel; output order matches input.
std::vector<ExperimentResult> run_experiments(const std::vector<CouplingConfig>& cfgs);

/// Survival function of chi-square with one degree of freedom.
double chi_square_sf_1dof(double x);

/// Kolmogorov-Smirnov distance between the empirical distribution of `values` and U(0,1).
double ks_uniform_statistic(std::vector<double> values);
/// Asymptotic 1% critical value 1.628 / sqrt(n).
double ks_critical_1pct(std::size_t n);

std::string experiment_json(const CouplingConfig& cfg, const ExperimentResult& result);
void write_batch_csv(std::ostream& out, const ExperimentResult& result);

}  // namespace omega
