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

#include "fdp_noise/discrete.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "fdp_noise/cnd.h"
#include "fdp_noise/roc.h"
#include "fdp_noise/tradeoff.h"
#include "gtest/gtest.h"

namespace fdp_noise {
namespace {

const boost::math::normal kZ(0.0, 1.0);
double Phi(double x) { return boost::math::cdf(kZ, x); }
const double kE = std::numbers::e;

double DiscreteLaplaceMass(double eps, int64_t x) {
  return (std::exp(eps) - 1.0) / (std::exp(eps) + 1.0) *
         std::exp(-eps * std::abs(x));
}

std::vector<TradeoffFunction> UniquenessCurves() {
  return {*MakeEpsDelta(1.0, 0.0), *MakeEpsDelta(1.0, 0.05), *MakeGdp(1.0),
          *MakeEpsDelta(0.0, 0.5)};
}

DiscretePmf Convolve(const DiscretePmf& a, const DiscretePmf& b) {
  std::vector<double> m(a.size() + b.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      m[i + j] += a.masses()[i] * b.masses()[j];
    }
  }
  double total = 0.0;
  for (double x : m) total += x;
  for (double& x : m) x /= total;
  return *DiscretePmf::Create(a.lo() + b.lo(), m);
}

TEST(RoundCndTest, PureDpCentreMass) {
  const DiscreteCnd d = *RoundCnd(*ConstructCnd(*MakeEpsDelta(1.0, 0.0)), 1);
  EXPECT_NEAR(d.pmf.Mass(0), (kE - 1.0) / (kE + 1.0), 1e-15);
  EXPECT_EQ(d.delta, 1);
}

TEST(RoundCndTest, GaussianIsRoundedNormal) {
  const DiscreteCnd d = *RoundCnd(*ConstructCnd(*MakeGdp(1.0)), 1);
  for (int64_t x = -8; x <= 8; ++x) {
    EXPECT_NEAR(d.pmf.Mass(x), Phi(x + 0.5) - Phi(x - 0.5), 1e-13) << x;
  }
}

TEST(RoundCndTest, RejectsBadDelta) {
  const ContinuousCnd cnd = *ConstructCnd(*MakeGdp(1.0));
  EXPECT_FALSE(RoundCnd(cnd, 0).ok());
  EXPECT_FALSE(RoundCnd(cnd, -2).ok());
}

TEST(RoundCndTest, OutputsVerifyForSeveralSensitivities) {
  for (const TradeoffFunction& f :
       {*MakeEpsDelta(1.0, 0.0), *MakeEpsDelta(1.0, 0.05)}) {
    const ContinuousCnd cnd = *ConstructCnd(f);
    for (int delta : {1, 2, 3, 6}) {
      const DiscreteCnd d = *RoundCnd(cnd, delta);
      const AuditReport r = VerifyDiscreteCnd(d);
      EXPECT_TRUE(r.passed())
          << f.label() << " delta=" << delta << "\n" << r.ToText(5);
      EXPECT_LE(d.pmf.truncated_mass(), 2e-15);
    }
  }
}

TEST(RoundCndTest, SixfoldStaircase) {
  const DiscreteCnd d =
      *RoundCnd(*ConstructCnd(*MakeEpsDelta(1.0, 0.05)), 6);
  // Each unit cell of the continuous noise maps to six integers: five fully
  // inside share one mass level and the one straddling two cells averages
  // the adjacent levels.
  EXPECT_EQ(d.delta, 6);
  for (int64_t k = 0; k <= 2; ++k) {
    const double level = d.pmf.Mass(6 * k);
    for (int64_t x = 6 * k - 2; x <= 6 * k + 2; ++x) {
      EXPECT_NEAR(d.pmf.Mass(x), level, 1e-12) << x;
      EXPECT_NEAR(d.pmf.Mass(-x), level, 1e-12) << -x;
    }
    EXPECT_GT(level, d.pmf.Mass(6 * k + 6));
    // Past 15 the next cell has a kink where the delta piece takes over.
    if (k < 2) {
      EXPECT_NEAR(d.pmf.Mass(6 * k + 3),
                  0.5 * (level + d.pmf.Mass(6 * k + 6)), 1e-12);
    }
  }
  EXPECT_NEAR(d.pmf.Mass(0), (1.0 - 2.0 * FixedPoint(d.f)) / 6.0, 1e-12);
}

TEST(UniqueSens1Test, PureDpIsDiscreteLaplace) {
  for (double eps : {0.5, 1.0, 3.0}) {
    const DiscreteCnd d = *UniqueSens1(*MakeEpsDelta(eps, 0.0));
    for (int64_t x = -10; x <= 10; ++x) {
      EXPECT_NEAR(d.pmf.Mass(x), DiscreteLaplaceMass(eps, x), 1e-15);
    }
  }
}

TEST(UniqueSens1Test, CentreMass) {
  for (const TradeoffFunction& f : UniquenessCurves()) {
    EXPECT_NEAR(UniqueSens1(f)->pmf.Mass(0), 1.0 - 2.0 * FixedPoint(f), 1e-15);
  }
  EXPECT_NEAR(UniqueSens1(*MakeGdp(1.0))->pmf.Mass(0), 2.0 * Phi(0.5) - 1.0,
              1e-13);
  EXPECT_FALSE(UniqueSens1(Identity()).ok());
}

TEST(UniqueSens1Test, AgreesWithRounding) {
  for (const TradeoffFunction& f : UniquenessCurves()) {
    const DiscretePmf a = UniqueSens1(f)->pmf;
    const DiscretePmf b = RoundCnd(*ConstructCnd(f), 1)->pmf;
    const int64_t lo = std::min(a.lo(), b.lo());
    const int64_t hi = std::max(a.hi(), b.hi());
    for (int64_t x = lo; x <= hi; ++x) {
      EXPECT_NEAR(a.Mass(x), b.Mass(x), 1e-9) << f.label() << " x=" << x;
    }
  }
}

TEST(UniqueSens1Test, CumulativeMassIdentity) {
  for (const TradeoffFunction& f : UniquenessCurves()) {
    const DiscretePmf pmf = UniqueSens1(f)->pmf;
    const double c = FixedPoint(f);
    for (int t = 0; t <= 20; ++t) {
      const double mass = pmf.Cdf(t) - pmf.Cdf(-t - 1);
      EXPECT_NEAR(mass, 1.0 - 2.0 * ApplyIterated(f, t, c), 1e-10)
          << f.label() << " t=" << t;
    }
  }
}

TEST(NamedDistributionTest, ClosedForms) {
  EXPECT_NEAR(DiscreteLaplace(1.0)->Mass(0), (kE - 1.0) / (kE + 1.0), 1e-15);
  EXPECT_NEAR(DiscreteLaplace(1.0)->Mass(3), DiscreteLaplaceMass(1.0, 3),
              1e-15);
  EXPECT_NEAR(RoundedGaussian(1.0)->Mass(0), 2.0 * Phi(0.5) - 1.0, 1e-14);
  EXPECT_NEAR(RoundedGaussian(2.0)->Mass(1), Phi(0.75) - Phi(0.25), 1e-14);
  double theta = 0.0;
  for (int k = -60; k <= 60; ++k) theta += std::exp(-0.5 * k * k);
  EXPECT_NEAR(DiscreteGaussian(1.0)->Mass(0), 1.0 / theta, 1e-15);
  EXPECT_NEAR(DiscreteGaussian(1.0)->Mass(2), std::exp(-2.0) / theta, 1e-15);
  EXPECT_NEAR(JacobiTheta3AtZero(std::exp(-0.5), 30), theta, 1e-14);
  EXPECT_NEAR(NamedDistribution("discrete-gaussian", 1.0)->Mass(0),
              1.0 / theta, 1e-15);
  EXPECT_TRUE(NamedDistribution("rounded-gaussian", 1.0).ok());
  EXPECT_TRUE(NamedDistribution("discrete-laplace", 1.0).ok());
  EXPECT_FALSE(NamedDistribution("poisson", 1.0).ok());
  EXPECT_FALSE(DiscreteLaplace(0.0).ok());
  EXPECT_FALSE(RoundedGaussian(-1.0).ok());
  EXPECT_FALSE(DiscreteGaussian(0.0).ok());
}

TEST(NamedDistributionTest, DiscreteGaussianFixedPoint) {
  const DiscretePmf dg = *DiscreteGaussian(1.0);
  const RocCurve roc = *ShiftRoc(dg, 1);
  const double c = BisectFixedPoint(roc.AsTradeoff("dg"));
  EXPECT_NEAR(c, 0.5 * (1.0 - dg.Mass(0)), 1e-9);
  EXPECT_NEAR(c, 0.301, 1e-3);
}

TEST(Sens2Test, IntervalEndpoints) {
  const ClosedInterval iv = Sens2PureDpInterval(1.0);
  EXPECT_NEAR(iv.lo, 2.0 * kE / (3.0 * kE + 1.0), 1e-15);
  EXPECT_NEAR(iv.hi, (kE + 1.0) / (kE + 3.0), 1e-15);
  EXPECT_NEAR(iv.lo, 0.5938455, 1e-7);
  EXPECT_NEAR(iv.hi, 0.6502446, 1e-7);
}

TEST(Sens2Test, AcceptsInsideRejectsOutside) {
  const ClosedInterval iv = Sens2PureDpInterval(1.0);
  EXPECT_FALSE(Sens2PureDp(1.0, 0.58).ok());
  EXPECT_FALSE(Sens2PureDp(1.0, iv.lo - 1e-6).ok());
  EXPECT_FALSE(Sens2PureDp(1.0, iv.hi + 1e-6).ok());
  for (double f0 : {iv.lo, iv.lo + 1e-6, 0.62, iv.hi - 1e-6, iv.hi}) {
    const absl::StatusOr<DiscreteCnd> d = Sens2PureDp(1.0, f0);
    ASSERT_TRUE(d.ok()) << f0 << " " << d.status();
    EXPECT_EQ(d->delta, 2);
    EXPECT_NEAR(d->pmf.Cdf(0), f0, 1e-12);
    EXPECT_NEAR(d->pmf.Cdf(-1), 1.0 - f0, 1e-12);
    const AuditReport r = VerifyDiscreteCnd(*d);
    EXPECT_TRUE(r.passed()) << f0 << "\n" << r.ToText(5);
  }
}

TEST(Sens2Test, CandidatesOutsideIntervalFailVerification) {
  const ClosedInterval iv = Sens2PureDpInterval(1.0);
  for (double f0 : {iv.lo - 1e-3, iv.hi + 1e-3}) {
    const absl::StatusOr<DiscreteCnd> d = Sens2Candidate(1.0, f0);
    if (d.ok()) {
      EXPECT_FALSE(VerifyDiscreteCnd(*d).passed()) << f0;
    }
  }
}

TEST(VerifyTest, Examples) {
  EXPECT_TRUE(VerifyDiscreteCnd(*UniqueSens1(*MakeEpsDelta(1.0, 0.0)))
                  .passed());
  const DiscreteCnd dg{*DiscreteGaussian(1.0), *MakeGdp(1.0), 1};
  const AuditReport bad = VerifyDiscreteCnd(dg);
  EXPECT_FALSE(bad.passed());
  EXPECT_FALSE(bad.ChecksNamed("T(N,N+t)>=f")[0].pass);
  const DiscreteCnd round_uniform{
      *DiscretePmf::Create(-1, {0.25, 0.5, 0.25}), *MakeEpsDelta(0.0, 0.5),
      1};
  const AuditReport r = VerifyDiscreteCnd(round_uniform);
  EXPECT_TRUE(r.passed()) << r.ToText(5);
  EXPECT_TRUE(r.ChecksNamed("f(F(t+delta))=F(t)")[0].pass);
}

TEST(VerifyTest, AsymmetricPmfFailsSymmetry) {
  const DiscreteCnd lopsided{*DiscretePmf::Create(-1, {0.2, 0.5, 0.3}),
                             *MakeEpsDelta(0.0, 0.5), 1};
  EXPECT_FALSE(VerifyDiscreteCnd(lopsided).ChecksNamed("P(N=x)=P(N=-x)")[0]
                   .pass);
}

TEST(DominanceDiscreteTest, SelfComparisonIsEquality) {
  const DiscreteCnd d = *UniqueSens1(*MakeEpsDelta(1.0, 0.0));
  const AuditReport r = DominanceAuditDiscrete(d, d.pmf, 0, 0, 10);
  EXPECT_TRUE(r.passed()) << r.ToText(5);
  for (const CheckRecord& c : r.ChecksNamed("P(|N'-a|<=t)")) {
    EXPECT_NEAR(c.margin, 0.0, 1e-12);
  }
}

TEST(DominanceDiscreteTest, LooserDiscreteLaplaceRival) {
  const DiscreteCnd d = *UniqueSens1(*MakeEpsDelta(1.0, 0.0));
  const DiscretePmf rival = *DiscreteLaplace(0.8);
  const double own = 1.0 - 2.0 * std::exp(-1.0) / (1.0 + kE);
  const double theirs = 1.0 - 2.0 * std::exp(-0.8) / (1.0 + std::exp(0.8));
  EXPECT_NEAR(own, 0.8022, 1e-4);
  EXPECT_NEAR(theirs, 0.72139, 1e-5);
  EXPECT_NEAR(rival.Cdf(1) - rival.Cdf(-2), theirs, 1e-14);
  const AuditReport r = DominanceAuditDiscrete(d, rival, 0, 0, 1);
  for (const CheckRecord& c : r.ChecksNamed("P(|N'-a|<=t)")) {
    if (c.t == 1.0) {
      EXPECT_NEAR(c.bound, own, 1e-14);
      EXPECT_NEAR(c.achieved, theirs, 1e-14);
      EXPECT_TRUE(c.pass);
    }
  }
  // Being 0.8-DP, the rival is more private than f_{1,0} demands.
  EXPECT_TRUE(r.ChecksNamed("rival T(N',N'+1)>=f")[0].pass);
  EXPECT_TRUE(r.passed());
}

TEST(DominanceDiscreteTest, PostProcessedRivalsAreDominated) {
  const DiscreteCnd d = *UniqueSens1(*MakeEpsDelta(2.0, 0.0));
  const std::vector<DiscretePmf> extra = {
      *DiscretePmf::Create(-1, {0.25, 0.5, 0.25}),
      *DiscretePmf::Create(-2, {0.2, 0.2, 0.2, 0.2, 0.2}),
      *DiscretePmf::Create(-3, {0.5, 0, 0, 0, 0, 0, 0.5})};
  auto sq = [](double x) { return x * x; };
  for (const DiscretePmf& e : extra) {
    const DiscretePmf rival = Convolve(d.pmf, e);
    ASSERT_LE(rival.size(), 41u);
    const AuditReport r = DominanceAuditDiscrete(d, rival, -5, 5, 15, sq);
    EXPECT_TRUE(r.passed()) << r.ToText(5);
  }
}

TEST(DominanceDiscreteTest, RivalsPassingDominanceObeyCentreBound) {
  const TradeoffFunction f = *MakeEpsDelta(1.0, 0.0);
  const double c = FixedPoint(f);
  for (const DiscretePmf& rival :
       {*DiscreteLaplace(1.0), *DiscreteLaplace(0.5),
        UniqueSens1(*MakeEpsDelta(1.0, 0.0))->pmf}) {
    ASSERT_TRUE(Dominates(*ShiftRoc(rival, 1), f, 1e-9).dominates);
    for (int t = 0; t <= 10; ++t) {
      double sup = 0.0;
      for (int64_t a = -5; a <= 5; ++a) {
        sup = std::max(sup, rival.Cdf(a + t) - rival.Cdf(a - t - 1));
      }
      EXPECT_LE(sup, 1.0 - 2.0 * ApplyIterated(f, t, c) + 1e-9);
    }
  }
}

TEST(DominanceDiscreteTest, RoundVersusFloorOfUniform) {
  const DiscretePmf round_pmf = *DiscretePmf::Create(-1, {0.25, 0.5, 0.25});
  const DiscretePmf floor_pmf = *DiscretePmf::Create(-1, {0.5, 0.5});
  EXPECT_EQ(*Moment(round_pmf, 2), 0.5);
  const double floor_mean = *Moment(floor_pmf, 1);
  EXPECT_EQ(floor_mean, -0.5);
  EXPECT_EQ(*Moment(floor_pmf, 2) - floor_mean * floor_mean, 0.25);
  const DiscreteCnd d{round_pmf, *MakeEpsDelta(0.0, 0.5), 1};
  const AuditReport r = DominanceAuditDiscrete(d, floor_pmf, -3, 3, 3);
  EXPECT_TRUE(r.passed()) << r.ToText(5);
}

TEST(DominanceDiscreteTest, OtherSensitivitiesNotApplicable) {
  const DiscreteCnd d = *Sens2PureDp(1.0, 0.62);
  EXPECT_TRUE(DominanceAuditDiscrete(d, d.pmf, 0, 0, 3).not_applicable());
}

TEST(MomentTest, OddMomentsOfSymmetricPmfsVanish) {
  const DiscretePmf pmf = UniqueSens1(*MakeGdp(1.0))->pmf;
  EXPECT_EQ(*Moment(pmf, 1), 0.0);
  EXPECT_EQ(*Moment(pmf, 3), 0.0);
  EXPECT_NEAR(*Moment(*DiscreteLaplace(1.0), 2),
              2.0 * std::exp(-1.0) / std::pow(1.0 - std::exp(-1.0), 2), 1e-11);
  EXPECT_FALSE(Moment(pmf, 0).ok());
}

TEST(SampleDiscreteTest, EmptyReproducibleAndCalibrated) {
  const DiscreteCnd lap = *UniqueSens1(*MakeEpsDelta(1.0, 0.0));
  EXPECT_TRUE(SampleDiscrete(lap, 3, 0).empty());
  EXPECT_EQ(SampleDiscrete(lap, 3, 100), SampleDiscrete(lap, 3, 100));
  const std::vector<int64_t> s = SampleDiscrete(lap, 11, 100000);
  EXPECT_NEAR(std::count(s.begin(), s.end(), 0) / 1e5, 0.462117, 0.01);
  const std::vector<int64_t> g =
      SampleDiscrete(*UniqueSens1(*MakeGdp(1.0)), 12, 100000);
  const double within = std::count_if(g.begin(), g.end(), [](int64_t x) {
    return std::abs(x) <= 1;
  });
  EXPECT_NEAR(within / 1e5, 1.0 - 2.0 * Phi(-1.5), 0.01);
  EXPECT_NEAR(1.0 - 2.0 * Phi(-1.5), 0.8664, 1e-4);
}

}  // namespace
}  // namespace fdp_noise
