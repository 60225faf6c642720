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

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace fdp_noise {
namespace {

constexpr double kDivisibilityTolerance = 1e-8;
constexpr double kDominanceTolerance = 1e-9;
constexpr double kPhiTolerance = 1e-6;
constexpr double kTruncationReportLevel = 1e-9;
constexpr double kPhiQuantile = 1e-12;
constexpr int kPhiCells = 20000;
constexpr int kDefaultTPoints = 201;

}  // namespace

absl::StatusOr<ContinuousCnd> ConstructLogConcaveCnd(
    const TradeoffFamily& family) {
  const AuditReport divisibility =
      CheckDivisibility(family, kDivisibilityTolerance);
  if (!divisibility.passed()) {
    const CheckRecord* worst = divisibility.worst_check();
    return absl::InvalidArgumentError(absl::StrFormat(
        "family %s is not infinitely divisible: %s off by %g", family.label(),
        worst->name, worst->achieved));
  }
  absl::StatusOr<double> c = FamilyFixedPoint(family, 1.0);
  if (!c.ok()) return c.status();
  auto cdf = [family](double x) -> CdfValue {
    if (std::isnan(x)) return {std::numeric_limits<double>::quiet_NaN()};
    if (x == 0.0) return {0.5};
    const double tail = family.member(std::fabs(x))(0.5);
    return {x < 0.0 ? tail : 1.0 - tail};
  };
  return ContinuousCnd(family.member(1.0), *c, cdf,
                       absl::StrCat("logconcave-cnd(", family.label(), ")"));
}

absl::StatusOr<double> FamilyFixedPoint(const TradeoffFamily& family,
                                        double t) {
  if (!(t > 0.0) || std::isinf(t)) {
    return absl::InvalidArgumentError(
        absl::StrCat("t must be positive and finite, got ", t));
  }
  return family.member(0.5 * t)(0.5);
}

TradeoffFamily RescaleFamily(const TradeoffFamily& family, double scale) {
  return TradeoffFamily(
      [family, scale](double t) { return family.member(scale * t); },
      absl::StrFormat("%s*%g", family.label(), scale));
}

AuditReport LogConcavityCheck(const std::function<double(double)>& cdf,
                              double x_min, double x_max, int points,
                              double tolerance) {
  AuditReport report("log-concavity of the cdf");
  points = std::max(points, 3);
  std::vector<double> log_f(points);
  for (int i = 0; i < points; ++i) {
    log_f[i] = std::log(cdf(x_min + (x_max - x_min) * i / (points - 1)));
  }
  WorstUpperBound midpoint;
  for (int i = 1; i + 1 < points; ++i) {
    // log F(x) = -inf left of the support; nothing to check there.
    if (std::isinf(log_f[i - 1])) continue;
    const double x = x_min + (x_max - x_min) * i / (points - 1);
    midpoint.Offer(x, std::nullopt, log_f[i],
                   0.5 * (log_f[i - 1] + log_f[i + 1]), tolerance);
  }
  midpoint.AddTo(report, "log F midpoint concavity");
  return report;
}

DominanceGrids DefaultDominanceGrids(const RivalNoise& rival) {
  constexpr std::array<double, 7> kOffsets = {-2.0, -1.0, -0.5, 0.0,
                                              0.5,  1.0,  2.0};
  double iqr = rival.InterquartileRange();
  if (!(iqr > 0.0)) iqr = 1.0;
  DominanceGrids grids;
  for (double o : kOffsets) grids.a.push_back(o * iqr);
  const double reach = std::max(std::fabs(*rival.Quantile(1e-6)),
                                std::fabs(*rival.Quantile(1.0 - 1e-6)));
  for (int i = 0; i < kDefaultTPoints; ++i) {
    grids.t.push_back(reach * i / (kDefaultTPoints - 1));
  }
  return grids;
}

double ExpectedPhiOfDistance(const RivalNoise& noise, double a,
                             const std::function<double(double)>& phi,
                             double* truncated) {
  double lost = 0.0;
  double total = 0.0;
  switch (noise.kind()) {
    case NoiseKind::kDiscretePmf: {
      const DiscretePmf& pmf = *noise.pmf();
      for (int64_t x = pmf.lo(); x <= pmf.hi(); ++x) {
        total += pmf.Mass(x) * phi(std::fabs(static_cast<double>(x) - a));
      }
      lost = pmf.truncated_mass();
      break;
    }
    case NoiseKind::kEmpiricalSamples: {
      for (double s : *noise.samples()) total += phi(std::fabs(s - a));
      total /= static_cast<double>(noise.samples()->size());
      break;
    }
    case NoiseKind::kContinuousCdf: {
      const double lo = *noise.Quantile(kPhiQuantile);
      const double hi = *noise.Quantile(1.0 - kPhiQuantile);
      const double h = (hi - lo) / kPhiCells;
      double previous = noise.Cdf(lo);
      for (int i = 0; i < kPhiCells; ++i) {
        const double right = i + 1 == kPhiCells ? hi : lo + h * (i + 1);
        const double current = noise.Cdf(right);
        const double mid = lo + h * (i + 0.5);
        total += (current - previous) * phi(std::fabs(mid - a));
        previous = current;
      }
      lost = noise.Cdf(lo) + (1.0 - noise.Cdf(hi));
      break;
    }
  }
  if (truncated != nullptr) *truncated = lost;
  return total;
}

AuditReport DominanceAudit(
    const ContinuousCnd& cnd, const RivalNoise& rival,
    std::vector<double> a_grid, std::vector<double> t_grid,
    const std::optional<std::function<double(double)>>& phi) {
  AuditReport report(absl::StrCat("stochastic dominance: ", cnd.label(),
                                  " vs ", rival.label()));
  report.AddAssumption(absl::StrCat(
      "rival ", rival.label(),
      " satisfies T(N', N' + t) >= f_t for every t >= 0; not verified here"));
  report.AddNote(
      "grid checks are necessary consequences of dominance, not a proof of "
      "it");
  if (a_grid.empty() || t_grid.empty()) {
    DominanceGrids defaults = DefaultDominanceGrids(rival);
    if (a_grid.empty()) a_grid = std::move(defaults.a);
    if (t_grid.empty()) t_grid = std::move(defaults.t);
  }
  const double tolerance = kDominanceTolerance + rival.IntervalBand();
  if (rival.IntervalBand() > 0.0) {
    report.AddNote(absl::StrFormat(
        "empirical rival: margins carry a DKW band of %.3g at level %g",
        rival.IntervalBand(), kDkwLevel));
  }
  for (double a : a_grid) {
    for (double t : t_grid) {
      const double own = 1.0 - 2.0 * cnd.Cdf(-t);
      report.AddUpperBoundCheck("P(|N'-a|<=t)<=P(|N|<=t)", a, t, own,
                                rival.ClosedProbability(a, t), tolerance);
    }
  }
  if (phi.has_value()) {
    const RivalNoise self = RivalNoise::FromCnd(cnd);
    double own_lost = 0.0;
    const double own = ExpectedPhiOfDistance(self, 0.0, *phi, &own_lost);
    for (double a : a_grid) {
      double lost = 0.0;
      const double theirs = ExpectedPhiOfDistance(rival, a, *phi, &lost);
      report.AddLowerBoundCheck("E phi(|N'-a|)>=E phi(|N|)", a, std::nullopt,
                                own, theirs,
                                kPhiTolerance * std::max(1.0, std::fabs(own)));
      if (lost > kTruncationReportLevel) {
        report.AddNote(absl::StrFormat(
            "E phi at a=%g ignores %.3g of the rival's mass", a, lost));
      }
    }
    if (own_lost > kTruncationReportLevel) {
      report.AddNote(absl::StrFormat("E phi(|N|) ignores %.3g of the mass",
                                     own_lost));
    }
  }
  return report;
}

}  // namespace fdp_noise
