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

#include "possibly/simulation.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "possibly/random.h"

namespace possibly {

namespace {

enum class Phase : std::uint64_t { kPairing = 1, kEvidence = 2 };

RandomStream OpenStream(const SimParams& params, const RunContext& context,
                        int step, Phase phase, std::uint64_t agent) {
  return RandomStream({params.seed, context.run_index,
                       static_cast<std::uint64_t>(step),
                       static_cast<std::uint64_t>(phase), agent});
}

std::size_t UniformIndex(RandomStream& rng, std::size_t count) {
  const auto index = static_cast<std::size_t>(rng.Uniform() *
                                              static_cast<double>(count));
  return std::min(index, count - 1);
}

std::pair<std::size_t, std::size_t> DrawPair(RandomStream& rng,
                                             std::size_t k) {
  const std::size_t first = UniformIndex(rng, k);
  std::size_t second = UniformIndex(rng, k - 1);
  if (second >= first) ++second;
  return {first, second};
}

void FusePair(std::vector<AgentBelief>& beliefs, const SimParams& params,
              const RunContext& context, int step) {
  RandomStream rng = OpenStream(params, context, step, Phase::kPairing, 0);
  const auto [first, second] = DrawPair(rng, beliefs.size());

  AgentBelief fused = [&]() -> AgentBelief {
    if (params.model == BeliefModel::kPossibilistic) {
      return Fuse(params.theta, std::get<PossibilityDistribution>(beliefs[first]),
                  std::get<PossibilityDistribution>(beliefs[second]));
    }
    return ProductFuse(std::get<ProbabilityDistribution>(beliefs[first]),
                       std::get<ProbabilityDistribution>(beliefs[second]),
                       context.diagnostics);
  }();

  if (params.adoption == FusionAdoption::kBoth) {
    beliefs[first] = fused;
    beliefs[second] = std::move(fused);
  } else {
    const bool first_adopts = rng.Uniform() < 0.5;
    beliefs[first_adopts ? first : second] = std::move(fused);
  }
}

void UpdateFromEvidence(AgentBelief& belief, const SimParams& params,
                        const EnvironmentSpec& env, const NoiseSpec& noise,
                        const RunContext& context, int step,
                        std::uint64_t agent) {
  RandomStream rng = OpenStream(params, context, step, Phase::kEvidence, agent);
  const std::size_t n = env.size();
  if (params.model == BeliefModel::kPossibilistic) {
    auto& pi = std::get<PossibilityDistribution>(belief);
    const std::size_t chosen = SampleState(Pignistic(pi), rng);
    if (rng.Uniform() >= params.evidence_rate) return;
    const double q = SampleQuality(env, noise, chosen, rng);
    pi = Fuse(params.theta, pi, PossibilisticEvidence(n, chosen, q));
  } else {
    auto& p = std::get<ProbabilityDistribution>(belief);
    const std::size_t chosen = SampleState(p, rng);
    if (rng.Uniform() >= params.evidence_rate) return;
    const double q = SampleQuality(env, noise, chosen, rng);
    p = ProductFuse(p, ProbabilisticEvidence(n, chosen, q),
                    context.diagnostics);
  }
}

}  // namespace

std::string ToString(BeliefModel model) {
  return model == BeliefModel::kPossibilistic ? "possibilistic"
                                              : "probabilistic";
}

std::string ToString(FusionAdoption adoption) {
  return adoption == FusionAdoption::kBoth ? "both" : "random-one";
}

BeliefModel ParseBeliefModel(const std::string& text) {
  if (text == "possibilistic") return BeliefModel::kPossibilistic;
  if (text == "probabilistic") return BeliefModel::kProbabilistic;
  throw std::invalid_argument("unknown model '" + text +
                              "' (expected possibilistic|probabilistic)");
}

FusionAdoption ParseFusionAdoption(const std::string& text) {
  if (text == "both") return FusionAdoption::kBoth;
  if (text == "random-one") return FusionAdoption::kRandomOne;
  throw std::invalid_argument("unknown fusion adoption '" + text +
                              "' (expected both|random-one)");
}

void SimParams::Validate() const {
  if (agents < 2) throw std::invalid_argument("agents must be >= 2");
  if (states < 2) throw std::invalid_argument("states must be >= 2");
  if (!(evidence_rate >= 0.0 && evidence_rate <= 1.0)) {
    throw std::invalid_argument("evidence-rate must lie in [0, 1]");
  }
  if (!(noise >= 0.0) || !std::isfinite(noise)) {
    throw std::invalid_argument("noise must be finite and >= 0");
  }
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
}

std::pair<std::size_t, std::size_t> FusionPair(const SimParams& params,
                                               const RunContext& context,
                                               int step) {
  RandomStream rng = OpenStream(params, context, step, Phase::kPairing, 0);
  return DrawPair(rng, static_cast<std::size_t>(params.agents));
}

PopulationSnapshot InitPopulation(const SimParams& params) {
  params.Validate();
  const auto n = static_cast<std::size_t>(params.states);
  const AgentBelief initial =
      params.model == BeliefModel::kPossibilistic
          ? AgentBelief(PossibilityDistribution::Vacuous(n))
          : AgentBelief(ProbabilityDistribution::Uniform(n));
  PopulationSnapshot population;
  population.beliefs.assign(static_cast<std::size_t>(params.agents), initial);
  return population;
}

void AdvanceInPlace(PopulationSnapshot& population, const SimParams& params,
                    const EnvironmentSpec& env, const NoiseSpec& noise,
                    const RunContext& context) {
  const int step = population.step;
  if (params.fusion_enabled) {
    FusePair(population.beliefs, params, context, step);
  }
  for (std::size_t a = 0; a < population.beliefs.size(); ++a) {
    UpdateFromEvidence(population.beliefs[a], params, env, noise, context,
                       step, a);
  }
  ++population.step;
}

PopulationSnapshot Step(PopulationSnapshot population, const SimParams& params,
                        const EnvironmentSpec& env, const NoiseSpec& noise,
                        const RunContext& context) {
  AdvanceInPlace(population, params, env, noise, context);
  return population;
}

MetricsRecord PopulationMetrics(const PopulationSnapshot& population) {
  MetricsRecord record;
  record.step = population.step;
  if (population.beliefs.empty()) return record;

  const auto values_of = [](const AgentBelief& b) {
    return std::visit([](const auto& d) { return d.values(); }, b);
  };
  const std::size_t n = values_of(population.beliefs.front()).size();
  const std::size_t best = n - 1;
  const double k = static_cast<double>(population.beliefs.size());

  record.mean_belief.assign(n, 0.0);
  for (const AgentBelief& b : population.beliefs) {
    const auto v = values_of(b);
    for (std::size_t i = 0; i < n; ++i) record.mean_belief[i] += v[i];
  }
  for (double& m : record.mean_belief) m /= k;

  if (std::holds_alternative<PossibilityDistribution>(
          population.beliefs.front())) {
    double nec = 0.0;
    for (const AgentBelief& b : population.beliefs) {
      nec += NecessityOf(std::get<PossibilityDistribution>(b), best);
    }
    record.mean_poss_best = record.mean_belief[best];
    record.mean_nec_best = nec / k;
  } else {
    record.mean_prob_best = record.mean_belief[best];
  }
  return record;
}

RunResult Run(const SimParams& params, const RunOptions& options) {
  return Run(params,
             EnvironmentSpec::Uniform(static_cast<std::size_t>(params.states)),
             NoiseSpec::Gaussian(params.noise), options);
}

RunResult Run(const SimParams& params, const EnvironmentSpec& env,
              const NoiseSpec& noise, const RunOptions& options) {
  params.Validate();
  if (env.size() != static_cast<std::size_t>(params.states)) {
    throw std::invalid_argument("environment size does not match states");
  }
  FusionDiagnostics diagnostics;
  const RunContext context{options.run_index, &diagnostics};

  RunResult result;
  PopulationSnapshot population = InitPopulation(params);
  const bool every = options.capture == Capture::kEveryStep;
  if (every) {
    result.records.reserve(static_cast<std::size_t>(params.steps) + 1);
    result.records.push_back(PopulationMetrics(population));
  }
  for (int t = 0; t < params.steps; ++t) {
    AdvanceInPlace(population, params, env, noise, context);
    if (every) result.records.push_back(PopulationMetrics(population));
  }
  if (!every) result.records.push_back(PopulationMetrics(population));
  result.degenerate_fusions = diagnostics.degenerate_fusions;
  return result;
}

}  // namespace possibly
