// Copyright 2026 The Possibly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "possibly/environment.h"
#include "possibly/possibility.h"
#include "possibly/probability.h"
#include "possibly/simulation.h"

namespace possibly {
namespace {

void BM_FrankTNorm(benchmark::State& state) {
  const FrankParameter theta(static_cast<double>(state.range(0)));
  double x = 0.37, y = 0.81;
  for (auto _ : state) {
    benchmark::DoNotOptimize(FrankTNorm(theta, x, y));
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_FrankTNorm)->Arg(-10)->Arg(1)->Arg(20)->Arg(500);

void BM_Fuse(benchmark::State& state) {
  const FrankParameter theta(20.0);
  const PossibilityDistribution a{1.0, 0.8, 0.7, 0.3, 0.6};
  const PossibilityDistribution b{0.4, 0.9, 1.0, 0.2, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(Fuse(theta, a, b));
}
BENCHMARK(BM_Fuse);

void BM_Pignistic(benchmark::State& state) {
  const PossibilityDistribution pi{1.0, 0.8, 0.7, 0.3, 0.6};
  for (auto _ : state) benchmark::DoNotOptimize(Pignistic(pi));
}
BENCHMARK(BM_Pignistic);

void BM_ProductFuse(benchmark::State& state) {
  const ProbabilityDistribution p{0.1, 0.2, 0.3, 0.25, 0.15};
  const ProbabilityDistribution q{0.3, 0.1, 0.2, 0.2, 0.2};
  for (auto _ : state) benchmark::DoNotOptimize(ProductFuse(p, q));
}
BENCHMARK(BM_ProductFuse);

void BM_Step(benchmark::State& state) {
  SimParams params;
  params.noise = 0.3;
  params.model = state.range(0) ? BeliefModel::kProbabilistic
                                : BeliefModel::kPossibilistic;
  const EnvironmentSpec env = EnvironmentSpec::Uniform(params.states);
  PopulationSnapshot population = InitPopulation(params);
  for (auto _ : state) {
    AdvanceInPlace(population, params, env, NoiseSpec{params.noise});
  }
}
BENCHMARK(BM_Step)->Arg(0)->Arg(1);

void BM_Run(benchmark::State& state) {
  SimParams params;
  params.noise = 0.3;
  params.steps = 300;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Run(params, {0, Capture::kFinalStep}));
  }
}
BENCHMARK(BM_Run)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace possibly

BENCHMARK_MAIN();
