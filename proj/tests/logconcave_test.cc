// Copyright 2026 The fdp-noise Authors
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

#include "fdp_noise/logconcave.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <boost/math/distributions/laplace.hpp>
#include <boost/math/distributions/normal.hpp>

#include "fdp_noise/cnd.h"
#include "fdp_noise/rival_noise.h"
#include "fdp_noise/tradeoff.h"
#include "gtest/gtest.h"

namespace fdp_noise {
namespace {

const boost::math::normal kZ(0.0, 1.0);
double Phi(double x) { return boost::math::cdf(kZ, x); }

std::vector<TradeoffFamily> Families() {
  return {GaussianFamily(1.0), GaussianFamily(0.5), LaplaceFamily(),
          LogisticFamily(), UniformFamily()};
}

TEST(LogConcaveCndTest, GaussianFamilyGivesNormalCdf) {
  const ContinuousCnd cnd = *ConstructLogConcaveCnd(GaussianFamily(1.0));
  EXPECT_EQ(cnd.Cdf(0.0), 0.5);
  for (double t = 0.0; t <= 8.0; t += 0.125) {
    EXPECT_NEAR(cnd.Cdf(-t), Phi(-t), 1e-12 * Phi(-t) + 1e-16) << t;
    EXPECT_NEAR(cnd.Cdf(t), Phi(t), 1e-12) << t;
  }
}

TEST(LogConcaveCndTest, LaplaceFamilyGivesLaplaceCdf) {
  const ContinuousCnd cnd = *ConstructLogConcaveCnd(LaplaceFamily());
  for (double t = 0.0; t <= 20.0; t += 0.25) {
    EXPECT_NEAR(cnd.Cdf(-t), 0.5 * std::exp(-t), 1e-13 * std::exp(-t)) << t;
  }
  EXPECT_NEAR(cnd.Cdf(-0.5), 0.5 * std::exp(-0.5), 1e-15);
}

TEST(LogConcaveCndTest, PassesCndInvariants) {
  for (const TradeoffFamily& fam : Families()) {
    const ContinuousCnd cnd = *ConstructLogConcaveCnd(fam);
    const AuditReport r = VerifyContinuousCnd(cnd, -10.0, 10.0, 2001, 1e-8);
    EXPECT_TRUE(r.passed()) << fam.label() << "\n" << r.ToText(5);
    EXPECT_NEAR(cnd.Cdf(-0.5), FixedPoint(fam.member(1.0)), 1e-9);
  }
}

TEST(LogConcaveCndTest, RejectsNonDivisibleFamily) {
  const TradeoffFamily pure(
      [](double t) { return *MakeEpsDelta(t, 0.0); }, "pure");
  EXPECT_FALSE(ConstructLogConcaveCnd(pure).ok());
}

TEST(LogConcaveCndTest, AgreesWithRecurrenceRouteOnHalfIntegers) {
  const ContinuousCnd direct = *ConstructLogConcaveCnd(GaussianFamily(1.0));
  const ContinuousCnd recurrence = *ConstructCnd(*MakeGdp(1.0));
  for (int k = -16; k <= 16; ++k) {
    EXPECT_NEAR(direct.Cdf(0.5 * k), recurrence.Cdf(0.5 * k), 1e-12) << k;
  }
}

TEST(FamilyFixedPointTest, Examples) {
  EXPECT_NEAR(*FamilyFixedPoint(LaplaceFamily(), 1.0), 0.5 * std::exp(-0.5),
              1e-15);
  EXPECT_NEAR(*FamilyFixedPoint(LaplaceFamily(), 1.0), 0.303265, 1e-6);
  EXPECT_NEAR(*FamilyFixedPoint(GaussianFamily(1.0), 1.0), Phi(-0.5), 1e-13);
  EXPECT_NEAR(*FamilyFixedPoint(LogisticFamily(), 1e-9), 0.5, 1e-9);
  EXPECT_FALSE(FamilyFixedPoint(LaplaceFamily(), 0.0).ok());
  EXPECT_FALSE(FamilyFixedPoint(LaplaceFamily(), -1.0).ok());
}

TEST(FamilyFixedPointTest, MatchesBisection) {
  for (const TradeoffFamily& fam : Families()) {
    for (double t : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      EXPECT_NEAR(*FamilyFixedPoint(fam, t), BisectFixedPoint(fam.member(t)),
                  1e-9)
          << fam.label() << " t=" << t;
    }
  }
}

TEST(FamilyTest, RescaleMultipliesShift) {
  const TradeoffFamily wide = RescaleFamily(GaussianFamily(1.0), 2.0);
  EXPECT_NEAR(wide.member(1.0)(0.5), Phi(-2.0), 1e-13);
}

TEST(LogConcavityTest, BuiltInsPassAndCauchyFails) {
  for (const TradeoffFamily& fam : Families()) {
    const ContinuousCnd cnd = *ConstructLogConcaveCnd(fam);
    EXPECT_TRUE(LogConcavityCheck([&](double x) { return cnd.Cdf(x); })
                    .passed())
        << fam.label();
  }
  EXPECT_FALSE(LogConcavityCheck([](double x) {
                 return 0.5 + std::atan(x) / std::numbers::pi;
               }).passed());
}

TEST(RivalNoiseTest, CdfGridValidation) {
  EXPECT_TRUE(RivalNoise::FromCdfGrid({-1, 0, 1}, {0, 0.5, 1}, "ok").ok());
  EXPECT_FALSE(RivalNoise::FromCdfGrid({-1, 0}, {0, 0.5, 1}, "len").ok());
  EXPECT_FALSE(RivalNoise::FromCdfGrid({0, -1, 1}, {0, 0.5, 1}, "x").ok());
  EXPECT_FALSE(RivalNoise::FromCdfGrid({-1, 0, 1}, {0, 0.7, 0.6}, "F").ok());
  EXPECT_FALSE(RivalNoise::FromCdfGrid({-1, 0, 1}, {0.1, 0.5, 1}, "lo").ok());
  const RivalNoise grid =
      *RivalNoise::FromCdfGrid({-1, 0, 1}, {0, 0.5, 1}, "uniform");
  EXPECT_NEAR(grid.Cdf(0.5), 0.75, 1e-15);
  EXPECT_EQ(grid.Cdf(-2.0), 0.0);
  EXPECT_NEAR(*grid.Quantile(0.25), -0.5, 1e-9);
}

TEST(RivalNoiseTest, SamplesUseDkwBand) {
  EXPECT_FALSE(RivalNoise::FromSamples({}, "empty").ok());
  EXPECT_FALSE(RivalNoise::FromSamples({1.0, std::nan("")}, "nan").ok());
  const RivalNoise s = *RivalNoise::FromSamples({3, 1, 2, 4}, "four");
  EXPECT_NEAR(s.CdfBand(), std::sqrt(std::log(2.0 / kDkwLevel) / 8.0), 1e-15);
  EXPECT_DOUBLE_EQ(s.Cdf(2.0), 0.5);
  EXPECT_DOUBLE_EQ(s.CdfLeft(2.0), 0.25);
  EXPECT_EQ(*s.Quantile(0.5), 2.0);
  EXPECT_DOUBLE_EQ(s.ClosedProbability(2.5, 0.5), 0.5);
}

TEST(RivalNoiseTest, ClosedFormRivals) {
  const boost::math::laplace lap(0.0, 0.5);
  const RivalNoise l = LaplaceNoise(0.5);
  for (double x : {-3.0, -0.2, 0.0, 1.0}) {
    EXPECT_NEAR(l.Cdf(x), boost::math::cdf(lap, x), 1e-15);
  }
  EXPECT_NEAR(l.InterquartileRange(), 2.0 * 0.5 * std::log(2.0), 1e-9);
  EXPECT_NEAR(GaussianNoise(1.2).ClosedProbability(0.0, 1.0),
              2.0 * Phi(1.0 / 1.2) - 1.0, 1e-14);
}

TEST(DominanceAuditTest, SelfComparisonPasses) {
  const ContinuousCnd cnd = *ConstructLogConcaveCnd(GaussianFamily(1.0));
  const RivalNoise self = RivalNoise::FromCnd(cnd);
  const AuditReport r = DominanceAudit(cnd, self, {0.0}, {0.0, 0.5, 1.0, 3.0},
                                       [](double x) { return x * x; });
  EXPECT_TRUE(r.passed()) << r.ToText(5);
  EXPECT_FALSE(r.assumptions().empty());
}

TEST(DominanceAuditTest, ShiftedLaplaceRival) {
  const ContinuousCnd cnd = *ConstructLogConcaveCnd(LaplaceFamily());
  const RivalNoise rival = LaplaceNoise(1.0);
  const double rival_mass =
      1.0 - 0.5 * std::exp(-1.3) - 0.5 * std::exp(-0.7);
  EXPECT_NEAR(rival.ClosedProbability(0.3, 1.0), rival_mass, 1e-15);
  EXPECT_NEAR(cnd.Cdf(1.0) - cnd.Cdf(-1.0), 1.0 - std::exp(-1.0), 1e-14);
  const AuditReport r = DominanceAudit(cnd, rival, {0.3}, {1.0});
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.checks().size(), 1u);
  EXPECT_NEAR(r.checks()[0].margin, 1.0 - std::exp(-1.0) - rival_mass, 1e-12);
}

TEST(DominanceAuditTest, WiderGaussianPassesNarrowerFails) {
  const ContinuousCnd cnd = *ConstructLogConcaveCnd(GaussianFamily(1.0));
  const RivalNoise wide = GaussianNoise(1.2);
  const DominanceGrids grids = DefaultDominanceGrids(wide);
  EXPECT_EQ(grids.a.size(), 7u);
  EXPECT_EQ(grids.t.size(), 201u);
  EXPECT_TRUE(DominanceAudit(cnd, wide, grids.a, grids.t,
                             [](double x) { return x * x; })
                  .passed());
  const RivalNoise narrow = GaussianNoise(0.5);
  const DominanceGrids g2 = DefaultDominanceGrids(narrow);
  EXPECT_FALSE(DominanceAudit(cnd, narrow, g2.a, g2.t).passed());
}

TEST(DominanceAuditTest, SampledRivalDoesNotRaiseFalseAlarms) {
  const ContinuousCnd cnd = *ConstructLogConcaveCnd(LaplaceFamily());
  // Samples from the CND itself: the true margins are zero at a = 0.
  const std::vector<double> s = SampleCnd(cnd, 5, 20000);
  const RivalNoise rival = *RivalNoise::FromSamples(s, "self samples");
  const DominanceGrids grids = DefaultDominanceGrids(rival);
  EXPECT_TRUE(DominanceAudit(cnd, rival, grids.a, grids.t).passed());
}

TEST(ExpectedPhiTest, GaussianSecondMoment) {
  const RivalNoise g = GaussianNoise(1.2);
  auto sq = [](double x) { return x * x; };
  EXPECT_NEAR(ExpectedPhiOfDistance(g, 0.0, sq), 1.44, 1e-4);
  EXPECT_NEAR(ExpectedPhiOfDistance(g, 1.0, sq), 2.44, 1e-4);
}

}  // namespace
}  // namespace fdp_noise
