// Copyright 2026 The qrl-thermal Authors
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

#include "qrl/channel.hpp"
#include "qrl/experiments.hpp"
#include "qrl/lindblad.hpp"
#include "qrl/protocol.hpp"

namespace {

const qrl::BathSpec kBath{0.3, 0.5, 1.0, {}};

void BM_ApplyChannel(benchmark::State& state) {
  const qrl::GadChannel ch = qrl::build_channel(kBath);
  qrl::DensityMatrix rho = qrl::DensityMatrix::pure(qrl::PureState::zero());
  for (auto _ : state) {
    rho = qrl::apply_channel(ch, rho);
    benchmark::DoNotOptimize(rho);
  }
}
BENCHMARK(BM_ApplyChannel);

void BM_BuildChannel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qrl::build_channel(kBath));
}
BENCHMARK(BM_BuildChannel);

void BM_IntegrateLindblad(benchmark::State& state) {
  const qrl::DensityMatrix rho = qrl::DensityMatrix::pure(qrl::PureState::zero());
  const qrl::IntegratorConfig cfg{static_cast<int>(state.range(0)), false};
  for (auto _ : state) benchmark::DoNotOptimize(qrl::integrate_lindblad(rho, kBath, cfg));
}
BENCHMARK(BM_IntegrateLindblad)->Arg(200)->Arg(2000);

void BM_RunRealization(benchmark::State& state) {
  const qrl::GadChannel ch = qrl::build_channel(kBath);
  qrl::LearningConfig cfg;
  cfg.n_iterations = static_cast<int>(state.range(0));
  std::uint64_t j = 0;
  for (auto _ : state) benchmark::DoNotOptimize(qrl::run_realization(ch, cfg, j++));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunRealization)->Arg(500);

void BM_Ensemble(benchmark::State& state) {
  qrl::EnsembleSpec spec;
  spec.bath = kBath;
  spec.n_realizations = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qrl::run_ensemble(spec, {1}));
}
BENCHMARK(BM_Ensemble)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
