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

#ifndef POSSIBLY_SIMULATION_H_
#define POSSIBLY_SIMULATION_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "possibly/environment.h"
#include "possibly/possibility.h"
#include "possibly/probability.h"

namespace possibly {

enum class BeliefModel { kPossibilistic, kProbabilistic };

// Who takes the fused belief after a pairwise meeting.
enum class FusionAdoption { kBoth, kRandomOne };

std::string ToString(BeliefModel model);
std::string ToString(FusionAdoption adoption);
// Throw std::invalid_argument on unknown names.
BeliefModel ParseBeliefModel(const std::string& text);
FusionAdoption ParseFusionAdoption(const std::string& text);

// Everything that determines one run. Defaults are the k=100, n=5,
// rho=0.05, sigma=0, theta=20, 1500-step possibilistic setting.
struct SimParams {
  int agents = 100;
  int states = 5;
  double evidence_rate = 0.05;
  double noise = 0.0;
  FrankParameter theta{20.0};
  int steps = 1500;
  BeliefModel model = BeliefModel::kPossibilistic;
  bool fusion_enabled = true;
  FusionAdoption adoption = FusionAdoption::kBoth;
  std::uint64_t seed = 0;

  // Throws std::invalid_argument naming the offending field.
  void Validate() const;
};

using AgentBelief = std::variant<PossibilityDistribution, ProbabilityDistribution>;

struct PopulationSnapshot {
  int step = 0;
  std::vector<AgentBelief> beliefs;
};

// Population aggregates at one step. The best state is index n-1.
struct MetricsRecord {
  int step = 0;
  // Possibilistic model only.
  std::optional<double> mean_poss_best;
  std::optional<double> mean_nec_best;
  // Probabilistic model only.
  std::optional<double> mean_prob_best;
  // Per-state mean of the agents' belief vectors.
  std::vector<double> mean_belief;
};

// Identifies a run within a sweep; it keys the random streams together
// with the seed so runs can execute in any order.
struct RunContext {
  std::uint64_t run_index = 0;
  FusionDiagnostics* diagnostics = nullptr;
};

// The unordered pair of distinct agents that meets at `step`, drawn
// uniformly from the population of params.agents.
std::pair<std::size_t, std::size_t> FusionPair(const SimParams& params,
                                               const RunContext& context,
                                               int step);

// k vacuous (possibilistic) or uniform (probabilistic) beliefs at step 0.
PopulationSnapshot InitPopulation(const SimParams& params);

// Advances the population by one time step: an optional pairwise fusion
// followed by evidential updating of every agent in index order.
PopulationSnapshot Step(PopulationSnapshot population, const SimParams& params,
                        const EnvironmentSpec& env, const NoiseSpec& noise,
                        const RunContext& context = {});

// In-place form of Step.
void AdvanceInPlace(PopulationSnapshot& population, const SimParams& params,
                    const EnvironmentSpec& env, const NoiseSpec& noise,
                    const RunContext& context = {});

MetricsRecord PopulationMetrics(const PopulationSnapshot& population);

enum class Capture { kEveryStep, kFinalStep };

struct RunOptions {
  std::uint64_t run_index = 0;
  Capture capture = Capture::kEveryStep;
};

struct RunResult {
  // One record per step from 0 to params.steps, or only the last with
  // Capture::kFinalStep.
  std::vector<MetricsRecord> records;
  std::uint64_t degenerate_fusions = 0;
};

// Runs the model for params.steps steps in the environment
// EnvironmentSpec::Uniform(params.states) with noise params.noise.
RunResult Run(const SimParams& params, const RunOptions& options = {});

RunResult Run(const SimParams& params, const EnvironmentSpec& env,
              const NoiseSpec& noise, const RunOptions& options = {});

}  // namespace possibly

#endif  // POSSIBLY_SIMULATION_H_
