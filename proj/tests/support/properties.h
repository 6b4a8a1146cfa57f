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

// Randomised property suites shared by the unit tests and the acceptance
// runner. Each suite reports how many cases it checked and the first
// counterexample found.

#ifndef POSSIBLY_TESTS_SUPPORT_PROPERTIES_H_
#define POSSIBLY_TESTS_SUPPORT_PROPERTIES_H_

#include <cstdint>
#include <string>
#include <vector>

namespace possibly::properties {

struct Report {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  // Largest observed violation measure, where meaningful.
  double worst = 0.0;

  bool ok() const { return cases > 0 && failures == 0; }
};

inline constexpr int kDefaultCases = 10'000;

Report TNormAxioms(int cases = kDefaultCases, std::uint64_t seed = 1);
Report FrankBoundsAndThetaMonotonicity(int cases = kDefaultCases,
                                       std::uint64_t seed = 2);
// Checks |T_theta - limit| <= 1e-3 at theta in {+-1e-4, +-500}.
Report FrankLimits(int cases = kDefaultCases, std::uint64_t seed = 3);
Report MeasureDuality(int cases = kDefaultCases, std::uint64_t seed = 4);
Report FusionNormalisation(int cases = kDefaultCases, std::uint64_t seed = 5);
Report PignisticBracketing(int cases = kDefaultCases, std::uint64_t seed = 6);
Report ProductFusionIdentities(int cases = kDefaultCases,
                               std::uint64_t seed = 7);
// Same seed gives byte-identical CSV, serially and on a worker pool.
Report Determinism();

std::vector<Report> AllSuites();

}  // namespace possibly::properties

#endif  // POSSIBLY_TESTS_SUPPORT_PROPERTIES_H_
