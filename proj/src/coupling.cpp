#include "omega/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include <json.hpp>

#include "omega/analytic.hpp"
#include "omega/spectral.hpp"

namespace omega {

namespace {

const Algebra& omega_algebra() {
  static const Algebra alg = Algebra::omega();
  return alg;
}

// Null probabilities this close to 0 or 1 make the chi-square statistic meaningless.
constexpr double kDegenerateMargin = 1e-12;

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11U) * 0x1.0p-53; }

}  // namespace

void CouplingConfig::validate() const {
  if (samples < 1) throw ArithmeticError("samples must be at least 1");
  if (batch_size < 1) throw ArithmeticError("batch_size must be at least 1");
  if (!std::isfinite(delta) || !std::isfinite(theta1) || !std::isfinite(theta2))
    throw ArithmeticError("phases must be finite");
}

double induced_psi_phase(double delta, double reference_phase) {
  const FloatNum before = phi_wave(reference_phase);
  const FloatNum after = phi_wave(reference_phase + delta);
  // after * conj_phi(before) = k cos(delta) + j sin(delta) for unit-magnitude waves.
  const FloatNum rotation = omega_algebra().mul(after, conjugate(before, Conjugation::phi));
  const FloatNum psi = iso_map(rotation, IsoDirection::phi_to_psi, 1e-9);
  return std::atan2(psi[1], psi[0]);
}

double modulated_probability(const CouplingConfig& cfg) {
  const Algebra& alg = omega_algebra();
  const double shift = induced_psi_phase(cfg.delta);
  const FloatNum path1 = exp(alg, FloatNum::unit(1, cfg.theta1));
  const FloatNum path2 = exp(alg, FloatNum::unit(1, cfg.theta2 + shift));
  const FloatNum amplitude = (path1 + path2) * 0.5;
  const double p = alg.mul(amplitude, conjugate(amplitude, Conjugation::psi))[0];
  return std::clamp(p, 0.0, 1.0);
}

double chi_square_sf_1dof(double x) { return x <= 0.0 ? 1.0 : std::erfc(std::sqrt(x / 2.0)); }

ExperimentResult run_experiment(const CouplingConfig& cfg) {
  cfg.validate();
  ExperimentResult r;
  r.probability = modulated_probability(cfg);
  CouplingConfig null_cfg = cfg;
  null_cfg.delta = 0.0;
  r.expected_probability = modulated_probability(null_cfg);

  std::mt19937_64 rng(cfg.rng_seed);
  std::array<std::uint64_t, 2> batch{};
  for (std::uint64_t n = 0; n < cfg.samples; ++n) {
    const int outcome = uniform01(rng) < r.probability ? 1 : 0;
    ++r.counts[outcome];
    ++batch[outcome];
    if ((n + 1) % cfg.batch_size == 0 || n + 1 == cfg.samples) {
      r.batch_counts.push_back(batch);
      batch = {};
    }
  }

  const double p0 = r.expected_probability;
  if (p0 <= kDegenerateMargin || p0 >= 1.0 - kDegenerateMargin) {
    r.degenerate = true;
    return r;
  }
  const double n = static_cast<double>(cfg.samples);
  const double e1 = n * p0;
  const double e0 = n * (1.0 - p0);
  const double d1 = static_cast<double>(r.counts[1]) - e1;
  const double d0 = static_cast<double>(r.counts[0]) - e0;
  r.chi_square = d1 * d1 / e1 + d0 * d0 / e0;
  r.p_value = chi_square_sf_1dof(*r.chi_square);
  return r;
}

std::vector<ExperimentResult> run_experiments(const std::vector<CouplingConfig>& cfgs) {
  std::vector<ExperimentResult> out(cfgs.size());
  for (const auto& c : cfgs) c.validate();
  modulated_probability(CouplingConfig{});  // initialise shared statics before threads start
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t n = 0; n < static_cast<std::int64_t>(cfgs.size()); ++n) out[n] = run_experiment(cfgs[n]);
  return out;
}

double ks_uniform_statistic(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t m = 0; m < values.size(); ++m) {
    const double v = std::clamp(values[m], 0.0, 1.0);
    d = std::max({d, (static_cast<double>(m) + 1.0) / n - v, v - static_cast<double>(m) / n});
  }
  return d;
}

double ks_critical_1pct(std::size_t n) { return 1.628 / std::sqrt(static_cast<double>(n)); }

std::string experiment_json(const CouplingConfig& cfg, const ExperimentResult& result) {
  nlohmann::ordered_json j;
  j["config"] = {{"delta", cfg.delta},       {"theta1", cfg.theta1},     {"theta2", cfg.theta2},
                 {"samples", cfg.samples},   {"rng_seed", cfg.rng_seed}, {"batch_size", cfg.batch_size}};
  j["counts"] = result.counts;
  j["probability"] = result.probability;
  j["expected_probability"] = result.expected_probability;
  j["degenerate"] = result.degenerate;
  j["chi_square"] = result.chi_square ? nlohmann::ordered_json(*result.chi_square) : nlohmann::ordered_json();
  j["p_value"] = result.p_value ? nlohmann::ordered_json(*result.p_value) : nlohmann::ordered_json();
  return j.dump(2) + "\n";
}

void write_batch_csv(std::ostream& out, const ExperimentResult& result) {
  out << "batch,outcome0,outcome1\n";
  for (std::size_t b = 0; b < result.batch_counts.size(); ++b)
    out << b << ',' << result.batch_counts[b][0] << ',' << result.batch_counts[b][1] << '\n';
}

}  // namespace omega
