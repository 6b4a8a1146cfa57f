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

#ifndef POSSIBLY_PROBABILITY_H_
#define POSSIBLY_PROBABILITY_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace possibly {

class RandomStream;

// Probabilities over states, summing to 1.
class ProbabilityDistribution {
 public:
  // Sums within this distance of 1 are renormalised on construction.
  static constexpr double kSumTolerance = 1e-9;

  // Throws std::invalid_argument when empty, any value is outside [0, 1], or
  // the sum is farther than kSumTolerance from 1.
  explicit ProbabilityDistribution(std::vector<double> values);
  ProbabilityDistribution(std::initializer_list<double> values)
      : ProbabilityDistribution(std::vector<double>(values)) {}

  static ProbabilityDistribution Uniform(std::size_t n);
  static ProbabilityDistribution OneHot(std::size_t n, std::size_t index);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }

  friend bool operator==(const ProbabilityDistribution&,
                         const ProbabilityDistribution&) = default;

 private:
  std::vector<double> values_;
};

// Counts fusions whose operands had (numerically) disjoint support.
struct FusionDiagnostics {
  std::uint64_t degenerate_fusions = 0;
};

// Denominators below this are treated as disjoint support.
inline constexpr double kDegenerateProductMass = 1e-300;

// Product fusion p1(s) p2(s) / sum_j p1(s_j) p2(s_j). Disjoint supports yield
// the uniform distribution and bump `diagnostics` when given.
// Throws std::invalid_argument on length mismatch.
ProbabilityDistribution ProductFuse(const ProbabilityDistribution& p1,
                                    const ProbabilityDistribution& p2,
                                    FusionDiagnostics* diagnostics = nullptr);

// Inverse-CDF categorical draw. Consumes exactly one uniform variate.
std::size_t SampleState(const ProbabilityDistribution& p, RandomStream& rng);

// Same draw from an already-generated uniform u in [0, 1).
std::size_t SampleStateAt(const ProbabilityDistribution& p, double u);

}  // namespace possibly

#endif  // POSSIBLY_PROBABILITY_H_
