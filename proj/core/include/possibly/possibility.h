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

#ifndef POSSIBLY_POSSIBILITY_H_
#define POSSIBLY_POSSIBILITY_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace possibly {

class ProbabilityDistribution;

// Selects a member of Frank's t-norm family. Finite parameters must be
// nonzero with |theta| <= kMaxFrankTheta; the three limits of the family are
// available as symbolic variants.
class FrankParameter {
 public:
  enum class Kind { kFinite, kProduct, kMinimum, kLukasiewicz };

  static constexpr double kMaxFrankTheta = 700.0;
  // Finite parameters closer to zero than this are evaluated as the product.
  static constexpr double kProductBand = 1e-4;

  // Throws std::invalid_argument for theta == 0, non-finite theta, or
  // |theta| > kMaxFrankTheta.
  explicit FrankParameter(double theta);

  static FrankParameter Product() { return FrankParameter(Kind::kProduct); }
  static FrankParameter Minimum() { return FrankParameter(Kind::kMinimum); }
  static FrankParameter Lukasiewicz() {
    return FrankParameter(Kind::kLukasiewicz);
  }

  // Accepts a number or one of "product", "min", "lukasiewicz".
  static FrankParameter Parse(const std::string& text);

  Kind kind() const { return kind_; }
  // Meaningful for Kind::kFinite only.
  double theta() const { return theta_; }

  std::string ToString() const;

  friend bool operator==(const FrankParameter&, const FrankParameter&) = default;

 private:
  explicit FrankParameter(Kind kind) : kind_(kind), theta_(0.0) {}

  Kind kind_;
  double theta_;
};

// Frank t-norm T_theta(x, y) for x, y in [0, 1].
double FrankTNorm(const FrankParameter& theta, double x, double y);

// A set of 0-based state indices drawn from {0, ..., n-1}.
class StateSubset {
 public:
  // Throws std::out_of_range if any index is >= n.
  StateSubset(std::size_t n, std::initializer_list<std::size_t> members);
  StateSubset(std::size_t n, std::span<const std::size_t> members);

  static StateSubset Empty(std::size_t n);
  static StateSubset All(std::size_t n);
  static StateSubset Singleton(std::size_t n, std::size_t index);

  std::size_t universe_size() const { return mask_.size(); }
  bool contains(std::size_t index) const { return mask_.at(index) != 0; }
  bool empty() const;
  std::vector<std::size_t> members() const;

  StateSubset Complement() const;
  StateSubset Union(const StateSubset& other) const;
  StateSubset Intersection(const StateSubset& other) const;

  friend bool operator==(const StateSubset&, const StateSubset&) = default;

 private:
  explicit StateSubset(std::vector<char> mask) : mask_(std::move(mask)) {}

  std::vector<char> mask_;
};

// Degrees of possibility, one per state, with maximum exactly 1.
class PossibilityDistribution {
 public:
  // Maximum distance from 1 that construction snaps to exactly 1.
  static constexpr double kNormalisationTolerance = 1e-12;

  // Throws std::invalid_argument when fewer than two states are given, any
  // value lies outside [0, 1], or the maximum is not within
  // kNormalisationTolerance of 1.
  explicit PossibilityDistribution(std::vector<double> values);
  PossibilityDistribution(std::initializer_list<double> values)
      : PossibilityDistribution(std::vector<double>(values)) {}

  // Total ignorance: every state fully possible.
  static PossibilityDistribution Vacuous(std::size_t n);
  // Certainty that the state is `index`.
  static PossibilityDistribution OneHot(std::size_t n, std::size_t index);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }

  bool IsVacuous() const;

  friend bool operator==(const PossibilityDistribution&,
                         const PossibilityDistribution&) = default;

 private:
  struct Trusted {};
  PossibilityDistribution(Trusted, std::vector<double> values)
      : values_(std::move(values)) {}
  friend PossibilityDistribution Fuse(const FrankParameter&,
                                      const PossibilityDistribution&,
                                      const PossibilityDistribution&);

  std::vector<double> values_;
};

// Possibility measure: max of pi over the subset, 0 for the empty set.
double PossibilityMeasure(const PossibilityDistribution& pi,
                          const StateSubset& subset);

// Necessity measure: min of 1 - pi over the complement. The empty set has
// necessity 0; the full set has necessity 1.
double NecessityMeasure(const PossibilityDistribution& pi,
                        const StateSubset& subset);

// Shorthands for singletons.
double PossibilityOf(const PossibilityDistribution& pi, std::size_t index);
double NecessityOf(const PossibilityDistribution& pi, std::size_t index);

// Max over states of T(pi1(s), pi2(s)). One minus this is the amount that
// fusion adds to every state.
double Consistency(const FrankParameter& theta,
                   const PossibilityDistribution& pi1,
                   const PossibilityDistribution& pi2);

// Normalised t-norm fusion: T(pi1(s), pi2(s)) + 1 - Consistency(pi1, pi2).
// Throws std::invalid_argument on length mismatch.
PossibilityDistribution Fuse(const FrankParameter& theta,
                             const PossibilityDistribution& pi1,
                             const PossibilityDistribution& pi2);

// Pignistic (betting) distribution of pi. States are ranked by descending
// possibility with ties broken by ascending index.
ProbabilityDistribution Pignistic(const PossibilityDistribution& pi);

}  // namespace possibly

#endif  // POSSIBLY_POSSIBILITY_H_
