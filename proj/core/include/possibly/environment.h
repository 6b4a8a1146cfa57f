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

#ifndef POSSIBLY_ENVIRONMENT_H_
#define POSSIBLY_ENVIRONMENT_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "possibly/possibility.h"
#include "possibly/probability.h"

namespace possibly {

class RandomStream;

// The best-of-n world: n states with strictly increasing quality, so the
// last state (index n-1) is the best.
class EnvironmentSpec {
 public:
  // Throws std::invalid_argument unless there are at least two qualities,
  // all in [0, 1] and strictly increasing.
  explicit EnvironmentSpec(std::vector<double> qualities);

  // q_i = i / (n + 1) for i = 1..n.
  static EnvironmentSpec Uniform(std::size_t n);

  std::size_t size() const { return qualities_.size(); }
  double quality(std::size_t index) const { return qualities_.at(index); }
  std::span<const double> qualities() const { return qualities_; }
  std::size_t best_state() const { return qualities_.size() - 1; }

 private:
  std::vector<double> qualities_;
};

// Additive Gaussian sensing noise.
struct NoiseSpec {
  double sigma = 0.0;

  // Throws std::invalid_argument for negative or non-finite sigma.
  static NoiseSpec Gaussian(double sigma);
};

// clamp(quality + epsilon, 0, 1).
double ClampedQuality(double quality, double epsilon);

// Noisy clamped quality of state `index`. Consumes exactly one Gaussian
// variate regardless of sigma.
double SampleQuality(const EnvironmentSpec& env, const NoiseSpec& noise,
                     std::size_t index, RandomStream& rng);

// Evidence after sampling state `index` with clamped quality q: 1 at
// `index`, 1 - q elsewhere.
PossibilityDistribution PossibilisticEvidence(std::size_t n, std::size_t index,
                                              double sampled_quality);

// Mixture q * one-hot(index) + (1 - q) * uniform.
ProbabilityDistribution ProbabilisticEvidence(std::size_t n, std::size_t index,
                                              double sampled_quality);

// Monte-Carlo estimate of P(sample(i) < sample(j)) with independent noise.
// Throws std::invalid_argument when i == j or samples == 0.
double ReversalProbability(const EnvironmentSpec& env, const NoiseSpec& noise,
                           std::size_t i, std::size_t j, std::uint64_t samples,
                           RandomStream& rng);

}  // namespace possibly

#endif  // POSSIBLY_ENVIRONMENT_H_
