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

#include "possibly/environment.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "possibly/random.h"

namespace possibly {

EnvironmentSpec::EnvironmentSpec(std::vector<double> qualities)
    : qualities_(std::move(qualities)) {
  if (qualities_.size() < 2) {
    throw std::invalid_argument("environment needs at least two states");
  }
  for (std::size_t i = 0; i < qualities_.size(); ++i) {
    if (!(qualities_[i] >= 0.0 && qualities_[i] <= 1.0)) {
      throw std::invalid_argument("state quality outside [0, 1]");
    }
    if (i > 0 && !(qualities_[i - 1] < qualities_[i])) {
      throw std::invalid_argument("state qualities must strictly increase");
    }
  }
}

EnvironmentSpec EnvironmentSpec::Uniform(std::size_t n) {
  std::vector<double> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = static_cast<double>(i + 1) / static_cast<double>(n + 1);
  }
  return EnvironmentSpec(std::move(q));
}

NoiseSpec NoiseSpec::Gaussian(double sigma) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("noise sigma must be finite and >= 0");
  }
  return NoiseSpec{sigma};
}

double ClampedQuality(double quality, double epsilon) {
  return std::clamp(quality + epsilon, 0.0, 1.0);
}

double SampleQuality(const EnvironmentSpec& env, const NoiseSpec& noise,
                     std::size_t index, RandomStream& rng) {
  const double z = rng.Gaussian();
  return ClampedQuality(env.quality(index), noise.sigma * z);
}

PossibilityDistribution PossibilisticEvidence(std::size_t n, std::size_t index,
                                              double sampled_quality) {
  if (index >= n) throw std::out_of_range("state index out of range");
  std::vector<double> v(n, 1.0 - sampled_quality);
  v[index] = 1.0;
  return PossibilityDistribution(std::move(v));
}

ProbabilityDistribution ProbabilisticEvidence(std::size_t n, std::size_t index,
                                              double sampled_quality) {
  if (index >= n) throw std::out_of_range("state index out of range");
  const double count = static_cast<double>(n);
  std::vector<double> v(n, (1.0 - sampled_quality) / count);
  v[index] = ((count - 1.0) * sampled_quality + 1.0) / count;
  return ProbabilityDistribution(std::move(v));
}

double ReversalProbability(const EnvironmentSpec& env, const NoiseSpec& noise,
                           std::size_t i, std::size_t j, std::uint64_t samples,
                           RandomStream& rng) {
  if (i == j) throw std::invalid_argument("reversal needs two distinct states");
  if (samples == 0) throw std::invalid_argument("reversal needs samples >= 1");
  std::uint64_t reversed = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const double qi = SampleQuality(env, noise, i, rng);
    const double qj = SampleQuality(env, noise, j, rng);
    if (qi < qj) ++reversed;
  }
  return static_cast<double>(reversed) / static_cast<double>(samples);
}

}  // namespace possibly
