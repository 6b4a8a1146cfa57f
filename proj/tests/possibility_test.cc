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

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "possibly/probability.h"
#include "support/oracles.h"

namespace possibly {
namespace {

const PossibilityDistribution kExample{1.0, 0.8, 0.7};
const PossibilityDistribution kExampleOther{0.4, 0.9, 1.0};

TEST(FrankParameterTest, RejectsZeroAndOverflowRange) {
  EXPECT_THROW(FrankParameter(0.0), std::invalid_argument);
  EXPECT_THROW(FrankParameter(700.5), std::invalid_argument);
  EXPECT_THROW(FrankParameter(-701.0), std::invalid_argument);
  EXPECT_THROW(FrankParameter(std::nan("")), std::invalid_argument);
  EXPECT_NO_THROW(FrankParameter(700.0));
  EXPECT_NO_THROW(FrankParameter(-700.0));
}

TEST(FrankParameterTest, ParsesNumbersAndLimits) {
  EXPECT_EQ(FrankParameter::Parse("20"), FrankParameter(20.0));
  EXPECT_EQ(FrankParameter::Parse("min"), FrankParameter::Minimum());
  EXPECT_EQ(FrankParameter::Parse("product").kind(),
            FrankParameter::Kind::kProduct);
  EXPECT_EQ(FrankParameter::Parse("lukasiewicz").ToString(), "lukasiewicz");
  EXPECT_THROW(FrankParameter::Parse("0"), std::invalid_argument);
  EXPECT_THROW(FrankParameter::Parse("20x"), std::invalid_argument);
}

TEST(FrankTNormTest, WorkedExampleValue) {
  EXPECT_NEAR(FrankTNorm(FrankParameter(10.0), 0.8, 0.9), 0.7791, 1e-4);
  EXPECT_NEAR(FrankTNorm(FrankParameter(10.0), 0.8, 0.9),
              static_cast<double>(oracle::FrankClosedForm(10.0L, 0.8L, 0.9L)),
              1e-14);
}

TEST(FrankTNormTest, IdentityElement) {
  for (double theta : {-50.0, -1.0, 0.5, 10.0, 700.0}) {
    EXPECT_EQ(FrankTNorm(FrankParameter(theta), 0.37, 1.0), 0.37);
    EXPECT_EQ(FrankTNorm(FrankParameter(theta), 1.0, 0.37), 0.37);
  }
  EXPECT_EQ(FrankTNorm(FrankParameter::Lukasiewicz(), 0.37, 1.0), 0.37);
}

TEST(FrankTNormTest, ConvergesToProductAsThetaShrinks) {
  // The literal closed form approaches x*y as theta -> 0 ...
  double previous_gap = 1.0;
  for (long double theta : {1e-1L, 1e-2L, 1e-3L}) {
    const double gap =
        std::abs(static_cast<double>(oracle::FrankClosedForm(theta, 0.5L, 0.4L)) - 0.2);
    EXPECT_LT(gap, previous_gap);
    previous_gap = gap;
  }
  EXPECT_LT(previous_gap, 1e-4);
  // ... and the implementation agrees in the cancellation-prone band.
  EXPECT_NEAR(FrankTNorm(FrankParameter(1e-6), 0.5, 0.4), 0.2, 1e-5);
  EXPECT_NEAR(FrankTNorm(FrankParameter(-1e-6), 0.5, 0.4), 0.2, 1e-5);
}

TEST(FrankTNormTest, MatchesClosedFormAcrossTheta) {
  for (double theta : {-30.0, -5.0, -0.9, -1e-3, 1e-3, 0.9, 1.0, 5.0, 30.0}) {
    for (double x : {0.0, 0.1, 0.45, 0.8, 0.99}) {
      for (double y : {0.0, 0.3, 0.5, 0.9}) {
        const auto expected = oracle::FrankClosedForm(theta, x, y);
        EXPECT_NEAR(FrankTNorm(FrankParameter(theta), x, y),
                    static_cast<double>(expected),
                    std::abs(theta) <= 5.0 ? 1e-12 : 1e-8)
            << "theta=" << theta << " x=" << x << " y=" << y;
      }
    }
  }
}

TEST(FrankTNormTest, ExtremeThetaStaysFinite) {
  for (double theta : {700.0, -700.0, 500.0, -500.0}) {
    for (double x : {0.0, 1e-9, 0.5, 0.999999, 1.0}) {
      for (double y : {0.0, 0.5, 0.999999}) {
        const double t = FrankTNorm(FrankParameter(theta), x, y);
        EXPECT_TRUE(std::isfinite(t));
        EXPECT_GE(t, std::max(0.0, x + y - 1.0));
        EXPECT_LE(t, std::min(x, y));
      }
    }
  }
}

TEST(FrankTNormTest, DiagonalGapToMinimumIsLog2OverTheta) {
  // For large theta, T(x, x) = x - ln(2)/theta + O(e^{-theta x}).
  for (double theta : {100.0, 500.0}) {
    const double gap = 0.5 - FrankTNorm(FrankParameter(theta), 0.5, 0.5);
    EXPECT_NEAR(gap, std::log(2.0) / theta, 1e-12);
  }
}

TEST(FrankTNormTest, LimitVariants) {
  EXPECT_DOUBLE_EQ(FrankTNorm(FrankParameter::Product(), 0.5, 0.4), 0.2);
  EXPECT_EQ(FrankTNorm(FrankParameter::Minimum(), 0.5, 0.4), 0.4);
  EXPECT_DOUBLE_EQ(FrankTNorm(FrankParameter::Lukasiewicz(), 0.7, 0.6), 0.3);
  EXPECT_EQ(FrankTNorm(FrankParameter::Lukasiewicz(), 0.3, 0.6), 0.0);
}

TEST(StateSubsetTest, RejectsOutOfRangeIndices) {
  EXPECT_THROW(StateSubset(3, {3}), std::out_of_range);
  EXPECT_EQ(StateSubset(3, {0, 2}).Complement(), StateSubset(3, {1}));
}

TEST(PossibilityDistributionTest, Validation) {
  EXPECT_THROW(PossibilityDistribution({1.0}), std::invalid_argument);
  EXPECT_THROW(PossibilityDistribution({0.9, 0.5}), std::invalid_argument);
  EXPECT_THROW(PossibilityDistribution({1.0, -0.1}), std::invalid_argument);
  EXPECT_THROW(PossibilityDistribution({1.0, 1.2}), std::invalid_argument);
  const PossibilityDistribution snapped({1.0 - 5e-13, 0.2});
  EXPECT_EQ(snapped[0], 1.0);
}

TEST(MeasureTest, WorkedExample) {
  const std::size_t n = 3;
  EXPECT_EQ(PossibilityMeasure(kExample, StateSubset(n, {1, 2})), 0.8);
  EXPECT_EQ(PossibilityMeasure(kExample, StateSubset::All(n)), 1.0);
  EXPECT_NEAR(NecessityMeasure(kExample, StateSubset(n, {0, 1})), 0.3, 1e-12);
  EXPECT_NEAR(NecessityMeasure(kExample, StateSubset(n, {0, 2})), 0.2, 1e-12);
  EXPECT_EQ(NecessityMeasure(kExample, StateSubset(n, {1, 2})), 0.0);
  EXPECT_NEAR(NecessityMeasure(kExample, StateSubset(n, {0})), 0.2, 1e-12);
  EXPECT_EQ(NecessityMeasure(kExample, StateSubset::All(n)), 1.0);
}

TEST(MeasureTest, IgnoranceOfSingletons) {
  const double expected[] = {0.8, 0.8, 0.7};
  for (std::size_t s = 0; s < 3; ++s) {
    EXPECT_NEAR(PossibilityOf(kExample, s) - NecessityOf(kExample, s),
                expected[s], 1e-12);
  }
}

TEST(MeasureTest, BruteForceMaximum) {
  const PossibilityDistribution pi{0.3, 1.0, 0.3, 0.9};
  const std::vector<double> raw{0.3, 1.0, 0.3, 0.9};
  EXPECT_EQ(PossibilityMeasure(pi, StateSubset(4, {0, 3})),
            oracle::MaxOver(raw, {0, 3}));
  EXPECT_EQ(PossibilityMeasure(pi, StateSubset(4, {0, 3})), 0.9);
}

TEST(MeasureTest, EmptySetAndVacuous) {
  EXPECT_EQ(PossibilityMeasure(kExample, StateSubset::Empty(3)), 0.0);
  EXPECT_EQ(NecessityMeasure(kExample, StateSubset::Empty(3)), 0.0);
  const auto vacuous = PossibilityDistribution::Vacuous(4);
  EXPECT_EQ(NecessityMeasure(vacuous, StateSubset(4, {0, 2})), 0.0);
  EXPECT_EQ(NecessityOf(vacuous, 3), 0.0);
}

TEST(FuseTest, WorkedExample) {
  const FrankParameter theta(10.0);
  const PossibilityDistribution fused = Fuse(theta, kExample, kExampleOther);
  EXPECT_NEAR(fused[0], 0.6209, 1e-4);
  EXPECT_EQ(fused[1], 1.0);
  EXPECT_NEAR(fused[2], 0.9209, 1e-4);
  EXPECT_NEAR(Consistency(theta, kExample, kExampleOther), 0.7791, 1e-4);
  EXPECT_NEAR(1.0 - Consistency(theta, kExample, kExampleOther), 0.2209, 1e-4);
}

TEST(FuseTest, VacuousIsIdentity) {
  const auto vacuous = PossibilityDistribution::Vacuous(3);
  EXPECT_EQ(Fuse(FrankParameter(3.0), kExample, vacuous), kExample);
  EXPECT_EQ(Fuse(FrankParameter::Lukasiewicz(), vacuous, kExample), kExample);
}

TEST(FuseTest, MinimumLimitHandEvaluation) {
  // Pointwise min (0, 0.2, 0), normaliser 0.8.
  const PossibilityDistribution fused =
      Fuse(FrankParameter::Minimum(), {1.0, 0.2, 0.0}, {0.0, 0.2, 1.0});
  EXPECT_DOUBLE_EQ(fused[0], 0.8);
  EXPECT_EQ(fused[1], 1.0);
  EXPECT_DOUBLE_EQ(fused[2], 0.8);
}

TEST(FuseTest, DisjointBeliefsBecomeVacuous) {
  const auto a = PossibilityDistribution::OneHot(4, 0);
  const auto b = PossibilityDistribution::OneHot(4, 3);
  EXPECT_EQ(Consistency(FrankParameter::Minimum(), a, b), 0.0);
  EXPECT_TRUE(Fuse(FrankParameter(20.0), a, b).IsVacuous());
  EXPECT_EQ(Consistency(FrankParameter(20.0), a, a), 1.0);
}

TEST(FuseTest, LengthMismatch) {
  EXPECT_THROW(Fuse(FrankParameter(1.0), PossibilityDistribution::Vacuous(2),
                    PossibilityDistribution::Vacuous(3)),
               std::invalid_argument);
  EXPECT_THROW(Consistency(FrankParameter(1.0),
                           PossibilityDistribution::Vacuous(2),
                           PossibilityDistribution::Vacuous(3)),
               std::invalid_argument);
}

TEST(PignisticTest, WorkedExample) {
  const ProbabilityDistribution p = Pignistic(kExample);
  EXPECT_NEAR(p[0], 0.4833, 1e-4);
  EXPECT_NEAR(p[1], 0.2833, 1e-4);
  EXPECT_NEAR(p[2], 0.2333, 1e-4);
}

TEST(PignisticTest, VacuousGivesUniform) {
  const ProbabilityDistribution p = Pignistic(PossibilityDistribution::Vacuous(5));
  for (double v : p.values()) EXPECT_DOUBLE_EQ(v, 0.2);
}

TEST(PignisticTest, TwoStates) {
  const ProbabilityDistribution p = Pignistic({1.0, 0.5});
  EXPECT_DOUBLE_EQ(p[0], 0.75);
  EXPECT_DOUBLE_EQ(p[1], 0.25);
}

TEST(PignisticTest, TiesAreIndependentOfOrder) {
  const ProbabilityDistribution p = Pignistic({0.4, 1.0, 0.4, 1.0});
  EXPECT_EQ(p[0], p[2]);
  EXPECT_EQ(p[1], p[3]);
  const ProbabilityDistribution q = Pignistic({1.0, 0.4, 1.0, 0.4});
  EXPECT_EQ(p[0], q[1]);
  EXPECT_EQ(p[1], q[0]);
}

}  // namespace
}  // namespace possibly
