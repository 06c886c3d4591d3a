#include <benchmark/benchmark.h>

#include "morsewp/morsewp.hpp"

namespace {

using namespace morsewp;

const MoleculeParams& hi() {
  static const MoleculeParams params = MoleculeParams::hydrogen_iodide();
  return params;
}

void BM_CoherentCoefficients(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cs_coefficients(1.4, hi()));
}
BENCHMARK(BM_CoherentCoefficients);

void BM_GaussAmplitudes(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_amplitudes(1, q));
}
BENCHMARK(BM_GaussAmplitudes)->Arg(8)->Arg(64)->Arg(512);

void BM_EigenBasis(benchmark::State& state) {
  const SpatialGrid grid(-0.8, 4.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(EigenBasis(grid, hi()));
}
BENCHMARK(BM_EigenBasis)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_Synthesize(benchmark::State& state) {
  const EigenBasis basis(SpatialGrid::default_grid(), hi());
  const auto cv = cs_coefficients(1.4, hi());
  const double t = timescales(hi()).t_revival / 8.0;
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(evolve(cv, t, hi()), basis));
}
BENCHMARK(BM_Synthesize)->Unit(benchmark::kMicrosecond);

void BM_WignerTransform(benchmark::State& state) {
  const SpatialGrid grid(-0.8, 4.0, static_cast<std::size_t>(state.range(0)));
  const EigenBasis basis(grid, hi());
  const auto psi = synthesize(evolve(cs_coefficients(1.4, hi()), 0.0, hi()), basis);
  const auto p_axis = MomentumGrid::symmetric(60.0, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(wigner_transform(psi, p_axis));
}
BENCHMARK(BM_WignerTransform)->Args({1024, 128})->Args({4096, 512})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
