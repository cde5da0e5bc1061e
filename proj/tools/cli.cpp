#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "omega/analytic.hpp"
#include "omega/coupling.hpp"
#include "omega/expr.hpp"
#include "omega/io.hpp"
#include "omega/schrodinger.hpp"
#include "omega/spectral.hpp"
#include "omega/table_search.hpp"

namespace omega::cli {

namespace {

using ojson = nlohmann::ordered_json;

/// A usage problem discovered after CLI11 parsing succeeded.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string algebra = "omega";
  std::string output = "text";
  double tol = kDefaultTolerance;
};

int default_workers() {
  if (const char* env = std::getenv("OMEGA_WORKERS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    throw UsageError("OMEGA_WORKERS must be a positive integer");
  }
  return std::max(1, omp_get_max_threads());
}

Algebra resolve(const Options& opt) {
  if (!builtin_table(opt.algebra) && opt.algebra.rfind("file:", 0) != 0)
    throw UsageError("unknown algebra '" + opt.algebra + "' (use omega, quaternion, complex or file:<path>)");
  return resolve_algebra(opt.algebra);
}

const char* error_kind(const Error& e) {
  if (dynamic_cast<const SingularElement*>(&e)) return "SingularElement";
  if (dynamic_cast<const NoConvergence*>(&e)) return "NoConvergence";
  if (dynamic_cast<const SyntaxError*>(&e)) return "SyntaxError";
  if (dynamic_cast<const InvalidTable*>(&e)) return "InvalidTable";
  if (dynamic_cast<const MalformedSignal*>(&e)) return "MalformedSignal";
  if (dynamic_cast<const GridTooCoarse*>(&e)) return "GridTooCoarse";
  if (dynamic_cast<const ZeroWave*>(&e)) return "ZeroWave";
  if (dynamic_cast<const IoError*>(&e)) return "IoError";
  return "ArithmeticError";
}

ojson value_json(const Value& v) {
  ojson coeffs = ojson::array();
  if (const auto* x = std::get_if<ExactNum>(&v)) {
    for (const auto& c : x->coefficients()) coeffs.push_back(to_string(c));
  } else {
    for (double c : std::get<FloatNum>(v).coefficients()) coeffs.push_back(c);
  }
  return {{"mode", std::holds_alternative<ExactNum>(v) ? "exact" : "float"},
          {"value", format(v)},
          {"coefficients", coeffs}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw IoError("failed writing " + path);
}

// ---- eval ----------------------------------------------------------------

int cmd_eval(const Options& opt, const std::string& text, std::ostream& out) {
  EvalContext ctx;
  ctx.algebra = resolve(opt);
  ctx.tolerance = opt.tol;
  const Expr e = parse_expression(text);
  const Value v = evaluate(e, ctx);
  if (opt.output == "json") {
    ojson j = {{"algebra", ctx.algebra.name()}, {"expression", text}};
    j.update(value_json(v));
    out << j.dump(2) << "\n";
  } else {
    out << format(v) << "\n";
  }
  return kExitOk;
}

// ---- props ---------------------------------------------------------------

int cmd_props(const Options& opt, std::ostream& out) {
  const Algebra alg = resolve(opt);
  out << (opt.output == "json" ? property_report_json(alg) : property_report_text(alg));
  return kExitOk;
}

// ---- search --------------------------------------------------------------

struct SearchArgs {
  bool noncommutative = false;
  std::string i2 = "-1";
  std::vector<std::string> predicates;
  int workers = 0;
  std::string out_path;
  bool no_timing = false;
};

int cmd_search(const Options& opt, const SearchArgs& a, std::ostream& out) {
  SearchConfig cfg;
  cfg.require_commutative = !a.noncommutative;
  if (a.i2 == "-1")
    cfg.require_i_squared_minus_one = true;
  else if (a.i2 == "free")
    cfg.require_i_squared_minus_one = false;
  else
    throw UsageError("--i2 takes -1 or free");
  if (!a.predicates.empty()) {
    cfg.predicates = PredicateSet();
    for (const auto& name : a.predicates) {
      auto p = parse_predicate(name);
      if (!p) throw UsageError("unknown predicate " + name);
      cfg.predicates.add(*p);
    }
  }
  cfg.worker_count = a.workers > 0 ? a.workers : default_workers();
  cfg.output_path = a.out_path;
  cfg.record_wall_time = !a.no_timing;
  const SearchResult r = search(cfg);
  if (opt.output == "json") {
    out << search_result_json(r, cfg.record_wall_time);
    return kExitOk;
  }
  out << "constraint level:   " << r.constraint_level << "\n";
  out << "total candidates:   " << r.total_candidates << "\n";
  out << "first-failure census:\n";
  for (Predicate p : r.predicates)
    out << "  " << predicate_name(p) << ": " << r.census.first_failure[static_cast<int>(p)] << "\n";
  out << "  passed: " << r.census.passed << "\n";
  out << "survivors:          " << r.survivors.size() << " raw, " << r.classes.size() << " up to relabeling\n";
  const auto omega_canonical = canonicalize(omega_table());
  out << "omega among survivors: " << (r.contains_canonical(omega_canonical) ? "yes" : "no") << "\n";
  for (const auto& c : r.classes) out << "class (" << c.members << " members):\n" << table_text(c.canonical);
  if (cfg.record_wall_time) out << "wall time:          " << r.wall_time_seconds << " s\n";
  return kExitOk;
}

// ---- dft -----------------------------------------------------------------

struct DftArgs {
  std::string in_path;
  std::string out_path;
  std::string kind = "phi";
  bool inverse = false;
};

int cmd_dft(const DftArgs& a, std::istream& in, std::ostream& out) {
  SignalKind kind;
  if (a.kind == "phi")
    kind = SignalKind::phi;
  else if (a.kind == "psi")
    kind = SignalKind::psi;
  else if (a.kind == "full")
    kind = SignalKind::full;
  else
    throw UsageError("--kind takes phi, psi or full");
  std::vector<FloatNum> samples;
  if (a.in_path.empty() || a.in_path == "-") {
    samples = read_coefficients_csv(in);
  } else {
    std::ifstream f(a.in_path);
    if (!f) throw IoError("cannot read " + a.in_path);
    samples = read_coefficients_csv(f);
  }
  const Signal spectrum = dft(Signal(kind, std::move(samples)), a.inverse ? Direction::inverse : Direction::forward);
  std::ostringstream csv;
  write_coefficients_csv(csv, spectrum.samples());
  if (a.out_path.empty())
    out << csv.str();
  else
    write_file(a.out_path, csv.str());
  return kExitOk;
}

// ---- schrodinger ---------------------------------------------------------

struct SchrodingerArgs {
  int grid = 512;
  int levels = 3;
  double length = std::numbers::pi;
  std::string out_path;
  std::string wave_path;
};

int cmd_schrodinger(const Options& opt, const SchrodingerArgs& a, std::ostream& out) {
  const GridWave wave = GridWave::periodic([](double y) { return phi_wave(y); }, 0.0, 2.0 * std::numbers::pi, a.grid);
  const EnergyValue half_k = classify_energy(FloatNum::unit(3, 0.5));
  const double residual = eigencheck(wave, half_k);
  const EnergyValue estimated = rayleigh_energy(wave);
  const auto spectrum = box_spectrum(a.levels, a.length, std::max(a.grid, 8 * a.levels));

  std::vector<std::pair<int, double>> convergence;
  for (int m : {64, 128, 256, 512}) {
    const GridWave w = GridWave::periodic([](double y) { return phi_wave(y); }, 0.0, 2.0 * std::numbers::pi, m);
    convergence.emplace_back(m, eigencheck(w, half_k));
  }

  if (!a.wave_path.empty()) {
    std::ostringstream csv;
    write_coefficients_csv(csv, wave.values());
    write_file(a.wave_path, csv.str());
  }

  std::ostringstream csv;
  csv << "level,a,b,c,d,classification\n";
  for (std::size_t n = 0; n < spectrum.size(); ++n) {
    csv << n + 1;
    for (int b = 0; b < kDim; ++b) csv << ',' << format_double(spectrum[n].value[b]);
    csv << ',' << energy_class_name(spectrum[n].classification) << '\n';
  }
  if (!a.out_path.empty()) write_file(a.out_path, csv.str());

  if (opt.output == "csv") {
    out << csv.str();
  } else if (opt.output == "json") {
    ojson j;
    j["grid_points"] = a.grid;
    j["phi_wave_eigencheck"] = {{"energy", format(half_k.value)}, {"residual", residual}};
    j["rayleigh_energy"] = {{"value", format(estimated.value)},
                            {"classification", energy_class_name(estimated.classification)}};
    ojson conv = ojson::array();
    for (const auto& [m, r] : convergence) conv.push_back({{"M", m}, {"residual", r}});
    j["convergence"] = conv;
    ojson levels = ojson::array();
    for (std::size_t n = 0; n < spectrum.size(); ++n)
      levels.push_back({{"level", n + 1},
                        {"energy", spectrum[n].value[0]},
                        {"exact", (n + 1) * (n + 1) * std::numbers::pi * std::numbers::pi / (2 * a.length * a.length)},
                        {"classification", energy_class_name(spectrum[n].classification)}});
    j["box_spectrum"] = levels;
    out << j.dump(2) << "\n";
  } else {
    out << "phi plane wave q(y) = k*exp(j*y) on a periodic grid, M = " << a.grid << "\n";
    out << "  eigencheck against E = " << format(half_k.value) << ": residual " << format_double(residual) << "\n";
    out << "  Rayleigh energy: " << format(estimated.value) << " ("
        << energy_class_name(estimated.classification) << ")\n";
    out << "  convergence:";
    for (const auto& [m, r] : convergence) out << " M=" << m << ":" << format_double(r);
    out << "\nbox spectrum on [0, " << format_double(a.length) << "]:\n";
    for (std::size_t n = 0; n < spectrum.size(); ++n)
      out << "  level " << n + 1 << ": " << format(spectrum[n].value) << " ("
          << energy_class_name(spectrum[n].classification) << ")\n";
  }
  return kExitOk;
}

// ---- couple --------------------------------------------------------------

struct CoupleArgs {
  CouplingConfig cfg;
  std::string out_path;
  std::string batch_csv;
};

int cmd_couple(const Options& opt, const CoupleArgs& a, std::ostream& out) {
  const ExperimentResult r = run_experiment(a.cfg);
  const std::string json = experiment_json(a.cfg, r);
  if (!a.out_path.empty()) write_file(a.out_path, json);
  if (!a.batch_csv.empty()) {
    std::ostringstream csv;
    write_batch_csv(csv, r);
    write_file(a.batch_csv, csv.str());
  }
  if (opt.output == "json") {
    out << json;
  } else {
    out << "modulated probability: " << format_double(r.probability) << "\n";
    out << "null probability:      " << format_double(r.expected_probability) << "\n";
    out << "counts:                " << r.counts[0] << " / " << r.counts[1] << "\n";
    if (r.degenerate)
      out << "chi-square:            undefined (degenerate null probability)\n";
    else
      out << "chi-square:            " << format_double(*r.chi_square) << "\np-value:               "
          << format_double(*r.p_value) << "\n";
  }
  return kExitOk;
}

// ---- repl ----------------------------------------------------------------

int cmd_repl(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  EvalContext ctx;
  ctx.algebra = resolve(opt);
  ctx.tolerance = opt.tol;
  std::string line;
  for (;;) {
    out << "Ω> " << std::flush;
    if (!std::getline(in, line)) break;
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    if (line == ":quit" || line == ":q") break;
    if (line == ":help") {
      out << "expressions use 1, i, j, k, + - * /, exp sin cos conj, and _ for the last result\n"
             ":algebra NAME switches algebra, :quit leaves\n";
      continue;
    }
    try {
      if (line.rfind(":algebra", 0) == 0) {
        std::string name = line.substr(8);
        name.erase(0, name.find_first_not_of(" \t"));
        ctx.algebra = resolve_algebra(name);
        ctx.last.reset();
        out << "algebra " << ctx.algebra.name() << "\n";
        continue;
      }
      const Value v = evaluate(parse_expression(line), ctx);
      out << format(v) << "\n";
      ctx.last = v;
    } catch (const Error& e) {
      err << error_kind(e) << ": " << e.what() << "\n";
    }
  }
  out << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypercomplex algebra workbench for Omega, H and table-defined algebras", "omega"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--algebra", opt.algebra, "omega, quaternion, complex or file:<path>");
  app.add_option("--output", opt.output, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--tol", opt.tol, "float tolerance")->check(CLI::PositiveNumber);

  std::string expression;
  auto* eval = app.add_subcommand("eval", "evaluate an expression");
  eval->add_option("expression", expression, "expression, e.g. \"k*exp(j*1.5708)\"")->required();

  auto* props = app.add_subcommand("props", "structural property report");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "exhaustive Cayley-table search");
  search_cmd->add_flag("--commutative", "restrict to commutative tables (default)");
  search_cmd->add_flag("--noncommutative", search_args.noncommutative, "allow non-commutative tables");
  search_cmd->add_option("--i2", search_args.i2, "-1 to fix i*i = -1, free otherwise");
  search_cmd->add_option("--predicates", search_args.predicates, "subset of P_psi P_phi_closed P_coupling P_phi_complex P_assoc")
      ->delimiter(',');
  search_cmd->add_option("--workers", search_args.workers, "worker threads (default: OMEGA_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--out", search_args.out_path, "result JSON file");
  search_cmd->add_flag("--no-timing", search_args.no_timing, "omit wall time so result files are byte-comparable");

  DftArgs dft_args;
  auto* dft_cmd = app.add_subcommand("dft", "discrete Fourier transform of a CSV signal");
  dft_cmd->add_option("--in", dft_args.in_path, "input CSV (index,a,b,c,d); - for stdin");
  dft_cmd->add_option("--out", dft_args.out_path, "output CSV (default stdout)");
  dft_cmd->add_option("--kind", dft_args.kind, "phi, psi or full");
  dft_cmd->add_flag("--inverse", dft_args.inverse, "inverse transform");

  SchrodingerArgs sch_args;
  auto* sch_cmd = app.add_subcommand("schrodinger", "phi plane-wave energy demo and box spectrum");
  sch_cmd->add_option("--grid", sch_args.grid, "grid points M")->check(CLI::Range(3, 1 << 22));
  sch_cmd->add_option("--levels", sch_args.levels, "box levels")->check(CLI::Range(1, 1000));
  sch_cmd->add_option("--length", sch_args.length, "box length L")->check(CLI::PositiveNumber);
  sch_cmd->add_option("--out", sch_args.out_path, "spectrum CSV (level,a,b,c,d,classification)");
  sch_cmd->add_option("--wave-out", sch_args.wave_path, "phi wave samples CSV");

  CoupleArgs couple_args;
  auto* couple_cmd = app.add_subcommand("couple", "two-path coupling experiment");
  couple_cmd->add_option("--delta", couple_args.cfg.delta, "phi-phase drift (radians)");
  couple_cmd->add_option("--theta1", couple_args.cfg.theta1, "phase of path 1");
  couple_cmd->add_option("--theta2", couple_args.cfg.theta2, "phase of path 2");
  couple_cmd->add_option("--samples", couple_args.cfg.samples, "number of draws")->check(CLI::PositiveNumber);
  couple_cmd->add_option("--seed", couple_args.cfg.rng_seed, "RNG seed");
  couple_cmd->add_option("--batch-size", couple_args.cfg.batch_size, "draws per batch")->check(CLI::PositiveNumber);
  couple_cmd->add_option("--out", couple_args.out_path, "result JSON file");
  couple_cmd->add_option("--batch-csv", couple_args.batch_csv, "per-batch counts CSV");

  auto* repl = app.add_subcommand("repl", "interactive evaluator");

  std::vector<std::string> args(argv.rbegin(), argv.rend() - 1);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(opt, expression, out);
    if (props->parsed()) return cmd_props(opt, out);
    if (search_cmd->parsed()) return cmd_search(opt, search_args, out);
    if (dft_cmd->parsed()) return cmd_dft(dft_args, in, out);
    if (sch_cmd->parsed()) return cmd_schrodinger(opt, sch_args, out);
    if (couple_cmd->parsed()) return cmd_couple(opt, couple_args, out);
    if (repl->parsed()) return cmd_repl(opt, in, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << error_kind(e) << ": " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace omega::cli
