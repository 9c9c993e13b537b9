#include <benchmark/benchmark.h>

#include <random>

#include "cylandau/config.hpp"
#include "cylandau/gauge.hpp"
#include "cylandau/grouprep.hpp"
#include "cylandau/spectral.hpp"
#include "cylandau/symmetry.hpp"

using namespace cylandau;

namespace {

void BM_ModeEigensolve(benchmark::State& state) {
  const auto config = make_config(1.0, 1.0);
  const Grid grid = make_grid(0.0, 12.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto solution =
        spectral::eigensolve(spectral::mode_hamiltonian(config, 0, grid), 4);
    benchmark::DoNotOptimize(solution.values.data());
  }
}
BENCHMARK(BM_ModeEigensolve)->Arg(1001)->Arg(2001)->Arg(4001);

void BM_Spectrum(benchmark::State& state) {
  const auto config = make_config(1.0, 1.0);
  for (auto _ : state) {
    auto result = spectral::spectrum(config, {-3, 3}, 4,
                                     static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(result.levels.data());
  }
}
BENCHMARK(BM_Spectrum)->Arg(1001)->Arg(2001);

void BM_Holonomy(benchmark::State& state) {
  const auto config = make_config(1.0, 1.0);
  gauge::LambdaTerm term;
  term.coeff = 0.7;
  term.frequency = 2.0;
  term.gauss_width = 0.4;
  const auto a = gauge::make_potential(config, 0.37, {term});
  const auto loop = gauge::circle_loop(0.2, 2);
  for (auto _ : state) {
    auto phase = gauge::holonomy(a, loop, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(&phase);
  }
}
BENCHMARK(BM_Holonomy)->Arg(64)->Arg(512)->Arg(4096);

void BM_AxialShift(benchmark::State& state) {
  const auto config = make_config(1.0, 1.0, 0.25, 0.0);
  const Grid grid = spectral::default_spectral_grid(config, {-2, 2}, 2001);
  std::mt19937_64 rng(7);
  const auto psi = random_state(config.q, {-2, 2}, grid, rng);
  for (auto _ : state) {
    auto moved = symmetry::apply_axial_shift(config, 1, psi);
    benchmark::DoNotOptimize(moved.modes.data());
  }
}
BENCHMARK(BM_AxialShift);

void BM_ProjectivePhaseCheck(benchmark::State& state) {
  const auto config = make_config(1.0, 1.0);
  const Grid grid = spectral::default_spectral_grid(config, {-3, 3}, 2001);
  std::mt19937_64 rng(11);
  const auto psi = normalize(random_state(config.q, {-2, 2}, grid, rng));
  for (auto _ : state) {
    auto dev = symmetry::projective_phase_deviation(config, 1.1, 1, psi);
    benchmark::DoNotOptimize(&dev);
  }
}
BENCHMARK(BM_ProjectivePhaseCheck);

void BM_RepCommutator(benchmark::State& state) {
  for (auto _ : state) {
    auto dev = grouprep::interior_commutator_deviation(
        grouprep::RepSpace::FourierCircle, 2, 1.3, 2,
        static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(&dev);
  }
}
BENCHMARK(BM_RepCommutator)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
