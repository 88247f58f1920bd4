#include <benchmark/benchmark.h>

#include <random>

#include "mncs/etd.hpp"
#include "mncs/kinetics.hpp"
#include "mncs/lyapunov.hpp"
#include "mncs/spectral.hpp"

namespace {

using namespace mncs;

RealField noise(const GridSpec& g) {
  std::mt19937_64 gen(1);
  std::normal_distribution<double> dist(0.0, 0.1);
  RealField f(g);
  for (double& x : f.values()) x = dist(gen);
  return f;
}

void BM_DctForward(benchmark::State& state) {
  const GridSpec g{static_cast<int>(state.range(0)), 64.0, 2};
  const RealField f = noise(g);
  SpectralField out(g);
  for (auto _ : state) {
    dct2_forward(f, out);
    benchmark::DoNotOptimize(out.values().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}
BENCHMARK(BM_DctForward)->RangeMultiplier(2)->Range(32, 512);

void BM_DctRoundTrip(benchmark::State& state) {
  const GridSpec g{static_cast<int>(state.range(0)), 64.0, 2};
  RealField f = noise(g);
  SpectralField spec(g);
  for (auto _ : state) {
    dct2_forward(f, spec);
    dct2_inverse(spec, f);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_DctRoundTrip)->RangeMultiplier(2)->Range(32, 512);

void BM_EtdStepFhn(benchmark::State& state) {
  const GridSpec g{static_cast<int>(state.range(0)), 64.0, 2};
  const std::vector<double> d{1.0, 0.0};
  const SplitSpec split = SplitSpec::from_coupling(CouplingMatrix::scalar(0.0, 2));
  const EtdTables tables = precompute_tables(g, d, split, 0.05);
  const NonlinearTerm term = make_nonlinear_term(FhnParams{}, split);
  SimState s = SimState::from_field(noise(g));
  for (auto _ : state) {
    etd_step(s, tables, term);
    benchmark::DoNotOptimize(s.u_hat.values().data());
  }
}
BENCHMARK(BM_EtdStepFhn)->Arg(64)->Arg(128)->Arg(256);

void BM_EstimateKa(benchmark::State& state) {
  const GridSpec g{128, 64.0, 2};
  const RealField f = noise(g);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_ka(f, FhnParams{}));
}
BENCHMARK(BM_EstimateKa);

void BM_Renormalize(benchmark::State& state) {
  const GridSpec g{128, 64.0, 2};
  std::vector<SimState> base;
  for (int i = 0; i < state.range(0); ++i) {
    RealField f = noise(g);
    f.values()[i] += 1.0;
    base.push_back(SimState::from_field(f));
  }
  for (auto _ : state) {
    state.PauseTiming();
    auto t = base;
    state.ResumeTiming();
    benchmark::DoNotOptimize(renormalize(t).log_scales.data());
  }
}
BENCHMARK(BM_Renormalize)->Arg(2)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
