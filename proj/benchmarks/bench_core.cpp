// Copyright 2026 the tri-dm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "tridm/eig.hpp"
#include "tridm/measures.hpp"
#include "tridm/model.hpp"
#include "tridm/presets.hpp"
#include "tridm/sweep.hpp"

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

const tridm::SystemParams kParams(kPi / 3, kPi / 2, 0.3, 2.0, 0.5);

void BM_HermitianEig8(benchmark::State& state) {
  const tridm::ComplexMatrix h = tridm::build_hamiltonian(kParams);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tridm::hermitian_eig(h));
  }
}
BENCHMARK(BM_HermitianEig8);

void BM_ExactPropagator(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    t += 0.01;
    benchmark::DoNotOptimize(tridm::exact_propagator(kParams, t));
  }
}
BENCHMARK(BM_ExactPropagator);

void BM_FactorizedPropagator(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    t += 0.01;
    benchmark::DoNotOptimize(tridm::factorized_propagator(kParams, t));
  }
}
BENCHMARK(BM_FactorizedPropagator);

void BM_Concurrence(benchmark::State& state) {
  const tridm::DensityMatrix rho = tridm::marginal(
      tridm::evolve(tridm::initial_state(kParams), tridm::factorized_propagator(kParams, 1.26)),
      tridm::PartitionId::AB);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tridm::concurrence(rho));
  }
}
BENCHMARK(BM_Concurrence);

void BM_SweepRow(benchmark::State& state) {
  const tridm::DensityMatrix rho0 = tridm::initial_state(kParams);
  double t = 0.0;
  for (auto _ : state) {
    t += 0.01;
    const tridm::DensityMatrix rho_t =
        tridm::evolve(rho0, tridm::factorized_propagator(kParams, t));
    benchmark::DoNotOptimize(
        tridm::measure_all(tridm::marginal(rho_t, tridm::PartitionId::AB)));
  }
}
BENCHMARK(BM_SweepRow);

void BM_Fig2aPreset(benchmark::State& state) {
  const tridm::FigurePreset preset = tridm::figure_preset("fig2a");
  for (auto _ : state) {
    benchmark::DoNotOptimize(tridm::run_figure_preset(preset));
  }
}
BENCHMARK(BM_Fig2aPreset)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
