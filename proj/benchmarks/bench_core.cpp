#include <benchmark/benchmark.h>

#include <random>

#include "toa/arrival.hpp"
#include "toa/evolution.hpp"
#include "toa/packets.hpp"
#include "toa/transforms.hpp"

using namespace toa;

namespace {

WaveFunction noise_state(const SpatialGrid& g) {
  std::mt19937 rng(5);
  std::normal_distribution<double> gauss;
  WaveFunction psi(g, Rep::position);
  for (auto& a : psi.amp) a = {gauss(rng), gauss(rng)};
  psi.normalize();
  return psi;
}

void bm_to_momentum(benchmark::State& state) {
  const SpatialGrid g(static_cast<int>(state.range(0)), -40.0,
                      80.0 / state.range(0));
  const WaveFunction psi = noise_state(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_momentum(psi));
  }
  state.SetComplexityN(state.range(0));
}

void bm_spectral_density(benchmark::State& state) {
  const SpatialGrid g(2048, -40.0, 80.0 / 2048);
  PacketSpec spec;
  spec.kind = PacketKind::odd_pair;
  const WaveFunction psi = make_packet(spec, g);
  const ThetaGrid tg =
      ThetaGrid::span(-8.0, 8.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kijowski_theta_density(psi, tg));
  }
  state.SetComplexityN(state.range(0));
}

void bm_cap_step(benchmark::State& state) {
  const SpatialGrid g(static_cast<int>(state.range(0)), -40.0,
                      80.0 / state.range(0));
  PacketSpec spec;
  spec.center = -10.0;
  const WaveFunction psi = make_packet(spec, g);
  AbsorberSpec screen;
  screen.strength = 2.0;
  screen.half_width = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cap_evolve(psi, 1e-2, 1e-3, screen));
  }
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(bm_to_momentum)->RangeMultiplier(4)->Range(256, 16384)->Complexity();
BENCHMARK(bm_spectral_density)->RangeMultiplier(4)->Range(256, 4096)->Complexity();
BENCHMARK(bm_cap_step)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

BENCHMARK_MAIN();
