// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "omega/analytic.hpp"
#include "omega/coupling.hpp"
#include "omega/schrodinger.hpp"
#include "omega/spectral.hpp"
#include "omega/table_search.hpp"
#include "oracles.hpp"
#include "process.hpp"

using namespace omega;

namespace {

constexpr double pi = std::numbers::pi;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// ---- 1 -------------------------------------------------------------------

void table_fidelity(Check& c) {
  const auto t0 = Clock::now();
  // Typed in by hand, row-major, rows and columns in the order 1, i, j, k.
  const std::array<std::array<std::string, 4>, 4> typed_h = {{{"1", "i", "j", "k"},
                                                                {"i", "-1", "k", "-j"},
                                                                {"j", "-k", "-1", "i"},
                                                                {"k", "j", "-i", "-1"}}};
  const std::array<std::array<std::string, 4>, 4> typed_omega = {{{"1", "i", "j", "k"},
                                                                    {"i", "-1", "-k", "j"},
                                                                    {"j", "-k", "-k", "j"},
                                                                    {"k", "j", "j", "k"}}};
  c.require(quaternion_table().to_strings() == typed_h, "H entries");
  c.require(omega_table().to_strings() == typed_omega, "Omega entries");
  auto entry = [](const MultiplicationTable& t, BasisIndex a, BasisIndex b) { return t(a, b).str(); };
  const auto& w = omega_table();
  const auto& h = quaternion_table();
  c.require(entry(w, 1, 2) == "-k", "Omega i*j = -k");
  c.require(entry(w, 3, 2) == "j", "Omega k*j = j");
  c.require(entry(w, 2, 2) == "-k", "Omega j*j = -k");
  c.require(entry(w, 3, 3) == "k", "Omega k*k = k");
  c.require(entry(h, 1, 2) == "k", "H i*j = k");
  c.require(entry(h, 3, 2) == "-i", "H k*j = -i");
  const double s = seconds_since(t0);
  c.require(s < 1.0, "time");
  c.detail << " 32 entries checked in " << s << " s";
}

// ---- 2 -------------------------------------------------------------------

void structural_report(Check& c) {
  const auto t0 = Clock::now();
  const PropertyReport w = check_properties(omega_table());
  c.require(w.commutative, "Omega commutative");
  c.require(w.associative, "Omega associative");
  const ExactNum one_minus_k(1, 0, 0, -1), k(0, 0, 0, 1), j(0, 0, 1, 0);
  c.require(w.zero_divisor && w.zero_divisor->left == one_minus_k && w.zero_divisor->right == k,
            "zero divisor witness (1-k, k)");
  c.require(w.has_closed({2, 3}), "phi closed");
  const ComplexStructure* phi = w.complex_structure_on({2, 3});
  c.require(phi && phi->unity == k && phi->imaginary == j, "phi complex structure (k, j)");

  const PropertyReport h = check_properties(quaternion_table());
  c.require(!h.commutative, "H non-commutative");
  c.require(h.associative, "H associative");
  c.require(!h.zero_divisor, "H has no zero divisor");
  c.require(!h.has_closed({2, 3}), "H phi not closed");
  const double s = seconds_since(t0);
  c.require(s < 1.0, "time");
  c.detail << " exact reports in " << s << " s";
}

// ---- 3 -------------------------------------------------------------------

void uniqueness_census(Check& c) {
  SearchConfig cfg;
  cfg.record_wall_time = false;
  std::uint64_t streamed = 0;
  const TableSpace space(cfg);
  space.for_each(0, space.size(), [&](const MultiplicationTable::Grid&) { ++streamed; });
  c.require(streamed == SpaceCounts::commutative_i2 && space.size() == SpaceCounts::commutative_i2,
            "enumerated count equals 8^5");

  const auto t0 = Clock::now();
  cfg.worker_count = 1;
  const SearchResult one = search(cfg);
  const double s = seconds_since(t0);
  c.require(s < 60.0, "time");
  c.require(one.total_candidates == 32768, "total candidates");
  c.require(one.contains_canonical(canonicalize(omega_table())), "canonical Omega among survivors");

  const std::string reference = search_result_json(one, false);
  const int max_workers = std::max(2, omp_get_max_threads());
  for (int workers : {2, 4, max_workers}) {
    cfg.worker_count = workers;
    c.require(search_result_json(search(cfg), false) == reference,
              "byte-identical output with " + std::to_string(workers) + " workers");
  }
  c.detail << " survivors " << one.survivors.size() << " raw / " << one.classes.size() << " canonical; census";
  for (Predicate p : one.predicates) c.detail << ' ' << predicate_name(p) << '=' << one.census.first_failure[static_cast<int>(p)];
  c.detail << " passed=" << one.census.passed << "; " << s << " s";
}

// ---- 4 -------------------------------------------------------------------

void wave_energy(Check& c) {
  const FloatNum half_k = FloatNum::unit(3, 0.5);
  std::vector<double> hs, residuals;
  for (int m : {64, 128, 256, 512}) {
    const GridWave w = GridWave::periodic([](double y) { return phi_wave(y); }, 0.0, 2 * pi, m);
    hs.push_back(w.spacing());
    residuals.push_back(eigencheck(w, half_k));
  }
  // Least-squares slope of log(residual) against log(h).
  double mx = 0, my = 0;
  for (std::size_t n = 0; n < hs.size(); ++n) {
    mx += std::log(hs[n]);
    my += std::log(residuals[n]);
  }
  mx /= hs.size();
  my /= hs.size();
  double sxy = 0, sxx = 0;
  for (std::size_t n = 0; n < hs.size(); ++n) {
    sxy += (std::log(hs[n]) - mx) * (std::log(residuals[n]) - my);
    sxx += (std::log(hs[n]) - mx) * (std::log(hs[n]) - mx);
  }
  const double slope = sxy / sxx;
  c.require(std::abs(slope - 2.0) <= 0.2, "slope 2.0 +- 0.2");
  c.require(residuals.back() < 1e-3, "residual at M = 512");
  const EnergyValue e = classify_energy(half_k);
  c.require(e.classification == EnergyClass::k_proportional, "classification of k/2");
  const GridWave w512 = GridWave::periodic([](double y) { return phi_wave(y); }, 0.0, 2 * pi, 512);
  c.require(rayleigh_energy(w512).classification == EnergyClass::k_proportional, "Rayleigh energy is k-proportional");
  c.detail << " slope " << slope << ", residual(512) " << residuals.back();
}

// ---- 5 -------------------------------------------------------------------

void coupling_identity(Check& c) {
  const double worst = coupling_grid_max_residual(13, 2 * pi);
  c.require(worst < 1e-10, "max residual < 1e-10");
  c.detail << " max residual " << worst;
}

// ---- 6 -------------------------------------------------------------------

double max_abs_diff(const Signal& a, const Signal& b) {
  double d = 0;
  for (std::size_t n = 0; n < a.size(); ++n) d = std::max(d, coefficient_norm(a[n] - b[n]));
  return d;
}

double max_abs(const Signal& a) {
  double d = 0;
  for (const auto& v : a.samples()) d = std::max(d, coefficient_norm(v));
  return d;
}

void hypercomplex_dft(Check& c) {
  oracle::FloatGen gen(2718);
  double worst_round_trip = 0, worst_commute = 0, worst_parseval = 0;
  for (std::size_t n : {8, 64, 257}) {
    std::vector<FloatNum> s;
    for (std::size_t m = 0; m < n; ++m) s.push_back(gen.phi_value());
    const Signal x(SignalKind::phi, s);
    const double rel = max_abs_diff(dft(dft(x, Direction::forward), Direction::inverse), x) / max_abs(x);
    worst_round_trip = std::max(worst_round_trip, rel);
    const ParsevalSums p = parseval_check(x);
    worst_parseval = std::max(worst_parseval, std::abs(p.lhs - p.rhs) / p.lhs);
  }
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<FloatNum> s;
    for (int m = 0; m < 64; ++m) s.push_back(gen.psi_value());
    const Signal x(SignalKind::psi, s);
    const Signal lhs = iso_map(dft(x, Direction::forward), IsoDirection::psi_to_phi);
    const Signal rhs = dft(iso_map(x, IsoDirection::psi_to_phi), Direction::forward);
    worst_commute = std::max(worst_commute, max_abs_diff(lhs, rhs));
  }
  c.require(worst_round_trip < 1e-9, "round trip");
  c.require(worst_commute < 1e-10, "isomorphism commutation");
  c.require(worst_parseval < 1e-9, "Parseval");
  c.detail << " round trip " << worst_round_trip << ", commutation " << worst_commute << ", Parseval " << worst_parseval;
}

// ---- 7 -------------------------------------------------------------------

void coupling_experiment(Check& c) {
  const auto t0 = Clock::now();
  std::vector<CouplingConfig> shifted, null;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CouplingConfig cfg;
    cfg.theta1 = 0.0;
    cfg.theta2 = pi / 3;
    cfg.samples = 10000;
    cfg.rng_seed = seed;
    cfg.delta = pi;
    shifted.push_back(cfg);
    cfg.delta = 0.0;
    cfg.rng_seed = 1000 + seed;
    null.push_back(cfg);
  }
  const auto alt = run_experiments(shifted);
  const auto nul = run_experiments(null);
  c.require(std::abs(alt[0].expected_probability - 0.75) < 1e-12, "null probability 0.75");
  c.require(std::abs(alt[0].probability - 0.25) < 1e-12, "modulated probability 0.25");
  int rejections = 0;
  for (const auto& r : alt)
    if (r.p_value && *r.p_value < 0.001) ++rejections;
  c.require(rejections >= 99, "power >= 99/100");
  std::vector<double> pvalues;
  for (const auto& r : nul) pvalues.push_back(r.p_value.value_or(-1.0));
  const double ks = ks_uniform_statistic(pvalues);
  c.require(ks < ks_critical_1pct(pvalues.size()), "KS below 1% critical value");
  const auto again = run_experiments(shifted);
  bool same = true;
  for (std::size_t n = 0; n < alt.size(); ++n) same = same && again[n].counts == alt[n].counts;
  c.require(same, "deterministic per seed");
  const double s = seconds_since(t0);
  c.require(s < 10.0, "time");
  c.detail << " rejections " << rejections << "/100, KS " << ks << " (critical " << ks_critical_1pct(100) << "), " << s
           << " s";
}

// ---- 8 -------------------------------------------------------------------

void cli_contract(Check& c) {
  const std::string bin = proc::quote(OMEGA_CLI_PATH);
  const auto a = proc::run(bin + " eval --algebra omega " + proc::quote("i*j"));
  c.require(a.exit_code == 0 && a.output == "-k\n", "omega i*j -> -k, exit 0");
  const auto b = proc::run(bin + " eval --algebra quaternion " + proc::quote("i*j"));
  c.require(b.exit_code == 0 && b.output == "k\n", "quaternion i*j -> k, exit 0");
  const auto d = proc::run(bin + " eval --algebra omega " + proc::quote("1/k"));
  c.require(d.exit_code == 1 && d.output.find("SingularElement") != std::string::npos,
            "omega 1/k -> SingularElement, exit 1");
  const auto u = proc::run(bin + " eval --algebra");
  c.require(u.exit_code == 2, "usage error exit 2");
  c.detail << " exit codes " << a.exit_code << ", " << b.exit_code << ", " << d.exit_code << ", " << u.exit_code;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"1 table fidelity", table_fidelity},
      {"2 structural report", structural_report},
      {"3 uniqueness census", uniqueness_census},
      {"4 wave/energy demonstration", wave_energy},
      {"5 coupling identity", coupling_identity},
      {"6 hypercomplex DFT", hypercomplex_dft},
      {"7 coupling experiment", coupling_experiment},
      {"8 CLI contract", cli_contract},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Check c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << " [exception: " << e.what() << "]";
    }
    std::cout << (c.ok ? "PASS " : "FAIL ") << name << ":" << c.detail.str() << "\n";
    if (!c.ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
