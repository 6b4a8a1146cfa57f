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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace possibly {
namespace {

SimParams Small(BeliefModel model = BeliefModel::kPossibilistic) {
  SimParams p;
  p.agents = 10;
  p.states = 4;
  p.steps = 50;
  p.model = model;
  p.seed = 5;
  return p;
}

TEST(SimParamsTest, Validation) {
  SimParams p;
  EXPECT_NO_THROW(p.Validate());
  p.agents = 1;
  EXPECT_THROW(p.Validate(), std::invalid_argument);
  p = SimParams{};
  p.evidence_rate = 1.5;
  EXPECT_THROW(p.Validate(), std::invalid_argument);
  p = SimParams{};
  p.steps = -1;
  EXPECT_THROW(p.Validate(), std::invalid_argument);
  EXPECT_THROW(ParseBeliefModel("fuzzy"), std::invalid_argument);
  EXPECT_EQ(ParseFusionAdoption("random-one"), FusionAdoption::kRandomOne);
}

TEST(InitPopulationTest, VacuousAndUniform) {
  SimParams p = Small();
  p.agents = 3;
  p.states = 2;
  const PopulationSnapshot poss = InitPopulation(p);
  EXPECT_EQ(poss.step, 0);
  ASSERT_EQ(poss.beliefs.size(), 3u);
  for (const auto& b : poss.beliefs) {
    EXPECT_EQ(std::get<PossibilityDistribution>(b), PossibilityDistribution({1.0, 1.0}));
  }
  p.model = BeliefModel::kProbabilistic;
  p.agents = 2;
  p.states = 5;
  const PopulationSnapshot prob = InitPopulation(p);
  ASSERT_EQ(prob.beliefs.size(), 2u);
  for (const auto& b : prob.beliefs) {
    EXPECT_EQ(std::get<ProbabilityDistribution>(b), ProbabilityDistribution::Uniform(5));
  }
}

PopulationSnapshot Distinct(std::size_t k, std::size_t n) {
  PopulationSnapshot pop;
  for (std::size_t a = 0; a < k; ++a) {
    pop.beliefs.emplace_back(PossibilityDistribution::OneHot(n, a % n));
  }
  return pop;
}

TEST(StepTest, NoEvidenceNoFusionIsConstant) {
  SimParams p = Small();
  p.evidence_rate = 0.0;
  p.fusion_enabled = false;
  const EnvironmentSpec env = EnvironmentSpec::Uniform(4);
  PopulationSnapshot pop = Distinct(10, 4);
  const auto before = pop.beliefs;
  for (int t = 0; t < 20; ++t) pop = Step(pop, p, env, NoiseSpec{0.3});
  EXPECT_EQ(pop.beliefs, before);
  EXPECT_EQ(pop.step, 20);
}

TEST(StepTest, FusionChangesExactlyThePair) {
  SimParams p = Small();
  p.evidence_rate = 0.0;
  const EnvironmentSpec env = EnvironmentSpec::Uniform(4);
  const PopulationSnapshot pop = Distinct(10, 4);
  const auto [a, b] = FusionPair(p, {}, 0);
  const PopulationSnapshot next = Step(pop, p, env, NoiseSpec{0.0});
  for (std::size_t i = 0; i < 10; ++i) {
    if (i == a || i == b) {
      EXPECT_EQ(next.beliefs[i], AgentBelief(Fuse(p.theta,
                                                  std::get<PossibilityDistribution>(pop.beliefs[a]),
                                                  std::get<PossibilityDistribution>(pop.beliefs[b]))));
    } else {
      EXPECT_EQ(next.beliefs[i], pop.beliefs[i]);
    }
  }
}

TEST(StepTest, RandomOneAdoptionChangesOneAgent) {
  SimParams p = Small();
  p.evidence_rate = 0.0;
  p.adoption = FusionAdoption::kRandomOne;
  const EnvironmentSpec env = EnvironmentSpec::Uniform(4);
  const PopulationSnapshot pop = Distinct(10, 4);
  const auto [a, b] = FusionPair(p, {}, 0);
  ASSERT_NE(pop.beliefs[a], pop.beliefs[b]);
  const PopulationSnapshot next = Step(pop, p, env, NoiseSpec{0.0});
  int changed = 0;
  for (std::size_t i = 0; i < 10; ++i) changed += next.beliefs[i] != pop.beliefs[i];
  EXPECT_LE(changed, 1);
}

TEST(StepTest, FusionOffChangesOnlyThroughEvidence) {
  SimParams p = Small();
  p.fusion_enabled = false;
  p.evidence_rate = 1.0;
  p.noise = 0.0;
  const EnvironmentSpec env = EnvironmentSpec::Uniform(4);
  PopulationSnapshot pop = InitPopulation(p);
  pop = Step(pop, p, env, NoiseSpec{0.0});
  // Every agent received exactly one noiseless evidence distribution.
  for (const auto& b : pop.beliefs) {
    const auto& pi = std::get<PossibilityDistribution>(b);
    int ones = 0;
    for (double v : pi.values()) ones += v == 1.0;
    EXPECT_EQ(ones, 1);
  }
}

TEST(StepTest, NoEvidenceKeepsVacuousPopulation) {
  SimParams p = Small();
  p.evidence_rate = 0.0;
  const RunResult r = possibly::Run(p);
  for (const MetricsRecord& m : r.records) {
    EXPECT_EQ(*m.mean_poss_best, 1.0);
    EXPECT_EQ(*m.mean_nec_best, 0.0);
  }
}

TEST(FusionPairTest, UniformOverUnorderedPairs) {
  SimParams p = Small();
  p.agents = 10;
  std::map<std::pair<std::size_t, std::size_t>, int> counts;
  const int steps = 100'000;
  for (int t = 0; t < steps; ++t) {
    auto [a, b] = FusionPair(p, {}, t);
    ASSERT_NE(a, b);
    ++counts[{std::min(a, b), std::max(a, b)}];
  }
  ASSERT_EQ(counts.size(), 45u);
  for (const auto& [pair, count] : counts) {
    EXPECT_NEAR(static_cast<double>(count) / steps, 1.0 / 45.0, 0.005);
  }
}

TEST(MetricsTest, VacuousAndOneHot) {
  SimParams p = Small();
  p.states = 5;
  const MetricsRecord vacuous = PopulationMetrics(InitPopulation(p));
  EXPECT_EQ(*vacuous.mean_poss_best, 1.0);
  EXPECT_EQ(*vacuous.mean_nec_best, 0.0);
  EXPECT_FALSE(vacuous.mean_prob_best.has_value());

  PopulationSnapshot certain;
  for (int a = 0; a < 4; ++a) {
    certain.beliefs.emplace_back(PossibilityDistribution::OneHot(5, 4));
  }
  const MetricsRecord m = PopulationMetrics(certain);
  EXPECT_EQ(*m.mean_poss_best, 1.0);
  EXPECT_EQ(*m.mean_nec_best, 1.0);
}

TEST(MetricsTest, HandAverage) {
  PopulationSnapshot pop;
  pop.beliefs.emplace_back(PossibilityDistribution{0.8, 1.0});  // Pi 1, N 0.2
  pop.beliefs.emplace_back(PossibilityDistribution{1.0, 0.8});  // Pi 0.8, N 0
  const MetricsRecord m = PopulationMetrics(pop);
  EXPECT_DOUBLE_EQ(*m.mean_poss_best, 0.9);
  EXPECT_NEAR(*m.mean_nec_best, 0.1, 1e-15);
  EXPECT_DOUBLE_EQ(m.mean_belief[0], 0.9);
}

TEST(MetricsTest, Probabilistic) {
  PopulationSnapshot pop;
  pop.beliefs.emplace_back(ProbabilityDistribution{0.5, 0.5});
  pop.beliefs.emplace_back(ProbabilityDistribution{0.1, 0.9});
  const MetricsRecord m = PopulationMetrics(pop);
  EXPECT_DOUBLE_EQ(*m.mean_prob_best, 0.7);
  EXPECT_FALSE(m.mean_nec_best.has_value());
}

TEST(RunTest, ZeroStepsGivesInitialRecord) {
  SimParams p;
  p.steps = 0;
  const RunResult r = possibly::Run(p);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0].step, 0);
  EXPECT_EQ(*r.records[0].mean_poss_best, 1.0);
  EXPECT_EQ(*r.records[0].mean_nec_best, 0.0);
}

TEST(RunTest, RecordsEveryStepOrFinal) {
  SimParams p = Small();
  EXPECT_EQ(possibly::Run(p).records.size(), 51u);
  const RunResult final_only = possibly::Run(p, {0, Capture::kFinalStep});
  ASSERT_EQ(final_only.records.size(), 1u);
  EXPECT_EQ(final_only.records[0].step, 50);
  EXPECT_EQ(final_only.records[0].mean_belief, possibly::Run(p).records.back().mean_belief);
}

TEST(RunTest, SameSeedIsBitIdentical) {
  for (BeliefModel model : {BeliefModel::kPossibilistic, BeliefModel::kProbabilistic}) {
    SimParams p = Small(model);
    p.noise = 0.3;
    p.evidence_rate = 0.3;
    const RunResult a = possibly::Run(p, {3});
    const RunResult b = possibly::Run(p, {3});
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      EXPECT_EQ(a.records[i].mean_belief, b.records[i].mean_belief);
    }
    const RunResult other = possibly::Run(p, {4});
    EXPECT_NE(a.records.back().mean_belief, other.records.back().mean_belief);
  }
}

TEST(RunTest, NoiselessPopulationConvergesToBestState) {
  SimParams p;  // k=100, n=5, rho=0.05, sigma=0, theta=20, 1500 steps
  p.seed = 42;
  const RunResult r = possibly::Run(p, {0, Capture::kFinalStep});
  EXPECT_GT(*r.records.back().mean_poss_best, 0.99);
  EXPECT_GT(*r.records.back().mean_nec_best, 0.99);
}

TEST(RunTest, BeliefsStayValidEveryStep) {
  for (BeliefModel model : {BeliefModel::kPossibilistic, BeliefModel::kProbabilistic}) {
    SimParams p;
    p.agents = 30;
    p.noise = 0.3;
    p.evidence_rate = 0.2;
    p.model = model;
    const EnvironmentSpec env = EnvironmentSpec::Uniform(5);
    for (std::uint64_t run = 0; run < 100; ++run) {
      PopulationSnapshot pop = InitPopulation(p);
      const RunContext context{run, nullptr};
      for (int t = 0; t < p.steps; ++t) {
        AdvanceInPlace(pop, p, env, NoiseSpec{p.noise}, context);
        for (const AgentBelief& b : pop.beliefs) {
          if (model == BeliefModel::kPossibilistic) {
            const auto v = std::get<PossibilityDistribution>(b).values();
            ASSERT_EQ(*std::max_element(v.begin(), v.end()), 1.0);
            ASSERT_GE(*std::min_element(v.begin(), v.end()), 0.0);
          } else {
            const auto v = std::get<ProbabilityDistribution>(b).values();
            double sum = 0.0;
            for (double x : v) {
              ASSERT_GE(x, 0.0);
              sum += x;
            }
            ASSERT_NEAR(sum, 1.0, 1e-9);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace possibly
