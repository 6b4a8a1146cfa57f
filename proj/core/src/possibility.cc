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

#include "possibly/possibility.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "possibly/probability.h"

namespace possibly {

FrankParameter::FrankParameter(double theta)
    : kind_(Kind::kFinite), theta_(theta) {
  if (!std::isfinite(theta) || theta == 0.0) {
    throw std::invalid_argument(
        "Frank parameter theta must be finite and nonzero");
  }
  if (std::abs(theta) > kMaxFrankTheta) {
    throw std::invalid_argument(
        "Frank parameter |theta| must not exceed 700; use the min or "
        "lukasiewicz limit instead");
  }
}

FrankParameter FrankParameter::Parse(const std::string& text) {
  if (text == "product") return Product();
  if (text == "min") return Minimum();
  if (text == "lukasiewicz") return Lukasiewicz();
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("Frank parameter theta: cannot parse '" +
                                text + "'");
  }
  return FrankParameter(value);
}

std::string FrankParameter::ToString() const {
  switch (kind_) {
    case Kind::kProduct:
      return "product";
    case Kind::kMinimum:
      return "min";
    case Kind::kLukasiewicz:
      return "lukasiewicz";
    case Kind::kFinite:
      break;
  }
  std::ostringstream out;
  out << theta_;
  return out.str();
}

double FrankTNorm(const FrankParameter& theta, double x, double y) {
  if (x >= 1.0) return y;
  if (y >= 1.0) return x;
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  const double lower_bound = std::max(0.0, x + y - 1.0);

  switch (theta.kind()) {
    case FrankParameter::Kind::kProduct:
      return x * y;
    case FrankParameter::Kind::kMinimum:
      return lo;
    case FrankParameter::Kind::kLukasiewicz:
      return lower_bound;
    case FrankParameter::Kind::kFinite:
      break;
  }

  const double t = theta.theta();
  if (std::abs(t) < FrankParameter::kProductBand) return x * y;

  double value;
  if (t >= 1.0) {
    // Factor e^{-t*lo} out of the log argument so every exponential has a
    // non-positive exponent; the remaining log1p argument stays >= e^{-t}-1.
    const double inner = -std::exp(-t * hi) +
                         (std::exp(-t * (hi - lo)) - std::exp(-t * (1.0 - lo)));
    value = lo - (std::log1p(inner) - std::log1p(-std::exp(-t))) / t;
  } else {
    // |ratio| <= 1, so the product cannot overflow for |t| <= 700.
    const double ratio = std::expm1(-t * hi) / std::expm1(-t);
    value = -std::log1p(std::expm1(-t * lo) * ratio) / t;
  }
  return std::clamp(value, lower_bound, lo);
}

StateSubset::StateSubset(std::size_t n,
                         std::initializer_list<std::size_t> members)
    : StateSubset(n, std::span<const std::size_t>(members.begin(),
                                                  members.size())) {}

StateSubset::StateSubset(std::size_t n, std::span<const std::size_t> members)
    : mask_(n, 0) {
  for (std::size_t m : members) {
    if (m >= n) {
      throw std::out_of_range("state index " + std::to_string(m) +
                              " out of range for " + std::to_string(n) +
                              " states");
    }
    mask_[m] = 1;
  }
}

StateSubset StateSubset::Empty(std::size_t n) {
  return StateSubset(std::vector<char>(n, 0));
}

StateSubset StateSubset::All(std::size_t n) {
  return StateSubset(std::vector<char>(n, 1));
}

StateSubset StateSubset::Singleton(std::size_t n, std::size_t index) {
  return StateSubset(n, {index});
}

bool StateSubset::empty() const {
  return std::none_of(mask_.begin(), mask_.end(), [](char c) { return c; });
}

std::vector<std::size_t> StateSubset::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i]) out.push_back(i);
  }
  return out;
}

StateSubset StateSubset::Complement() const {
  std::vector<char> mask(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i) mask[i] = !mask_[i];
  return StateSubset(std::move(mask));
}

StateSubset StateSubset::Union(const StateSubset& other) const {
  if (other.mask_.size() != mask_.size()) {
    throw std::invalid_argument("subset universes differ");
  }
  std::vector<char> mask(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    mask[i] = mask_[i] || other.mask_[i];
  }
  return StateSubset(std::move(mask));
}

StateSubset StateSubset::Intersection(const StateSubset& other) const {
  if (other.mask_.size() != mask_.size()) {
    throw std::invalid_argument("subset universes differ");
  }
  std::vector<char> mask(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    mask[i] = mask_[i] && other.mask_[i];
  }
  return StateSubset(std::move(mask));
}

PossibilityDistribution::PossibilityDistribution(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw std::invalid_argument(
        "possibility distribution needs at least two states");
  }
  for (double v : values_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("possibility degree outside [0, 1]");
    }
  }
  auto top = std::max_element(values_.begin(), values_.end());
  if (1.0 - *top > kNormalisationTolerance) {
    throw std::invalid_argument("possibility distribution maximum is not 1");
  }
  *top = 1.0;
}

PossibilityDistribution PossibilityDistribution::Vacuous(std::size_t n) {
  return PossibilityDistribution(std::vector<double>(n, 1.0));
}

PossibilityDistribution PossibilityDistribution::OneHot(std::size_t n,
                                                        std::size_t index) {
  if (index >= n) throw std::out_of_range("state index out of range");
  std::vector<double> v(n, 0.0);
  v[index] = 1.0;
  return PossibilityDistribution(std::move(v));
}

bool PossibilityDistribution::IsVacuous() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](double v) { return v == 1.0; });
}

namespace {

void RequireSameUniverse(const PossibilityDistribution& pi,
                         const StateSubset& subset) {
  if (pi.size() != subset.universe_size()) {
    throw std::invalid_argument("subset universe does not match distribution");
  }
}

void RequireSameLength(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("distributions have different lengths (" +
                                std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }
}

}  // namespace

double PossibilityMeasure(const PossibilityDistribution& pi,
                          const StateSubset& subset) {
  RequireSameUniverse(pi, subset);
  double best = 0.0;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (subset.contains(i)) best = std::max(best, pi[i]);
  }
  return best;
}

double NecessityMeasure(const PossibilityDistribution& pi,
                        const StateSubset& subset) {
  RequireSameUniverse(pi, subset);
  if (subset.empty()) return 0.0;
  double worst = 1.0;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (!subset.contains(i)) worst = std::min(worst, 1.0 - pi[i]);
  }
  return worst;
}

double PossibilityOf(const PossibilityDistribution& pi, std::size_t index) {
  if (index >= pi.size()) throw std::out_of_range("state index out of range");
  return pi[index];
}

double NecessityOf(const PossibilityDistribution& pi, std::size_t index) {
  if (index >= pi.size()) throw std::out_of_range("state index out of range");
  double worst = 1.0;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i != index) worst = std::min(worst, 1.0 - pi[i]);
  }
  return worst;
}

double Consistency(const FrankParameter& theta,
                   const PossibilityDistribution& pi1,
                   const PossibilityDistribution& pi2) {
  RequireSameLength(pi1.size(), pi2.size());
  double best = 0.0;
  for (std::size_t i = 0; i < pi1.size(); ++i) {
    best = std::max(best, FrankTNorm(theta, pi1[i], pi2[i]));
  }
  return best;
}

PossibilityDistribution Fuse(const FrankParameter& theta,
                             const PossibilityDistribution& pi1,
                             const PossibilityDistribution& pi2) {
  RequireSameLength(pi1.size(), pi2.size());
  const std::size_t n = pi1.size();
  std::vector<double> fused(n);
  std::size_t top = 0;
  for (std::size_t i = 0; i < n; ++i) {
    fused[i] = FrankTNorm(theta, pi1[i], pi2[i]);
    if (fused[i] > fused[top]) top = i;
  }
  const double normaliser = 1.0 - fused[top];
  for (double& v : fused) v = std::min(1.0, v + normaliser);
  fused[top] = 1.0;
  return PossibilityDistribution(PossibilityDistribution::Trusted{},
                                 std::move(fused));
}

ProbabilityDistribution Pignistic(const PossibilityDistribution& pi) {
  const std::size_t n = pi.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return pi[a] > pi[b]; });

  // Walk from the least possible state upward, accumulating the increments
  // (pi_(j) - pi_(j+1)) / j shared by every state ranked at or above j.
  std::vector<double> p(n);
  double acc = 0.0;
  double next = 0.0;
  for (std::size_t rank = n; rank-- > 0;) {
    const double current = pi[order[rank]];
    acc += (current - next) / static_cast<double>(rank + 1);
    p[order[rank]] = acc;
    next = current;
  }
  return ProbabilityDistribution(std::move(p));
}

}  // namespace possibly
