// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "omega/coupling.hpp"
#include "omega/spectral.hpp"
#include "omega/table_search.hpp"

using namespace omega;

namespace {

Signal random_phi_signal(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<FloatNum> s;
  for (std::size_t m = 0; m < n; ++m) s.emplace_back(0.0, 0.0, u(rng), u(rng));
  return Signal(SignalKind::phi, std::move(s));
}

void BM_DftReference(benchmark::State& state) {
  const Signal x = random_phi_signal(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dft_reference(x, Direction::forward));
  state.SetComplexityN(state.range(0));
}

void BM_DftParallel(benchmark::State& state) {
  const Signal x = random_phi_signal(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dft(x, Direction::forward));
  state.SetComplexityN(state.range(0));
}

SearchConfig unital_pinned() {
  // k*k = k pinned: 8^8 = 16,777,216 unital candidates.
  SearchConfig cfg;
  cfg.require_commutative = false;
  cfg.require_i_squared_minus_one = false;
  cfg.pins.push_back({3, 3, SignedBasis(1, 3)});
  cfg.record_wall_time = false;
  return cfg;
}

void BM_SearchSerial(benchmark::State& state) {
  const SearchConfig cfg = unital_pinned();
  for (auto _ : state) benchmark::DoNotOptimize(search_serial(cfg));
}

void BM_SearchParallel(benchmark::State& state) {
  SearchConfig cfg = unital_pinned();
  cfg.worker_count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search(cfg));
}

std::vector<CouplingConfig> experiment_batch() {
  std::vector<CouplingConfig> cfgs(64);
  for (std::size_t n = 0; n < cfgs.size(); ++n) {
    cfgs[n].delta = 3.141592653589793;
    cfgs[n].theta2 = 1.0471975511965976;
    cfgs[n].samples = 100000;
    cfgs[n].rng_seed = n;
  }
  return cfgs;
}

void BM_ExperimentsSerial(benchmark::State& state) {
  const auto cfgs = experiment_batch();
  for (auto _ : state)
    for (const auto& c : cfgs) benchmark::DoNotOptimize(run_experiment(c));
}

void BM_ExperimentsParallel(benchmark::State& state) {
  const auto cfgs = experiment_batch();
  for (auto _ : state) benchmark::DoNotOptimize(run_experiments(cfgs));
}

}  // namespace

BENCHMARK(BM_DftReference)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DftParallel)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExperimentsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExperimentsParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
