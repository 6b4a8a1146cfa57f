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

#include "possibly/probability.h"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "possibly/random.h"

namespace possibly {

ProbabilityDistribution::ProbabilityDistribution(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("probability distribution has no states");
  }
  for (double v : values_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("probability outside [0, 1]");
    }
  }
  const double sum = std::accumulate(values_.begin(), values_.end(), 0.0);
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw std::invalid_argument("probabilities sum to " + std::to_string(sum) +
                                ", not 1");
  }
  if (sum != 1.0) {
    for (double& v : values_) v /= sum;
  }
}

ProbabilityDistribution ProbabilityDistribution::Uniform(std::size_t n) {
  if (n == 0) throw std::invalid_argument("uniform over zero states");
  return ProbabilityDistribution(
      std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ProbabilityDistribution ProbabilityDistribution::OneHot(std::size_t n,
                                                        std::size_t index) {
  if (index >= n) throw std::out_of_range("state index out of range");
  std::vector<double> v(n, 0.0);
  v[index] = 1.0;
  return ProbabilityDistribution(std::move(v));
}

ProbabilityDistribution ProductFuse(const ProbabilityDistribution& p1,
                                    const ProbabilityDistribution& p2,
                                    FusionDiagnostics* diagnostics) {
  if (p1.size() != p2.size()) {
    throw std::invalid_argument("distributions have different lengths");
  }
  const std::size_t n = p1.size();
  std::vector<double> joint(n);
  double mass = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    joint[i] = p1[i] * p2[i];
    mass += joint[i];
  }
  if (mass < kDegenerateProductMass) {
    if (diagnostics != nullptr) ++diagnostics->degenerate_fusions;
    return ProbabilityDistribution::Uniform(n);
  }
  for (double& v : joint) v /= mass;
  return ProbabilityDistribution(std::move(joint));
}

std::size_t SampleStateAt(const ProbabilityDistribution& p, double u) {
  double cumulative = 0.0;
  std::size_t last_supported = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    last_supported = i;
    cumulative += p[i];
    if (u < cumulative) return i;
  }
  // Rounding left the total just below u.
  return last_supported;
}

std::size_t SampleState(const ProbabilityDistribution& p, RandomStream& rng) {
  return SampleStateAt(p, rng.Uniform());
}

}  // namespace possibly
