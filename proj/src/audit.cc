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

#include "fdp_noise/audit.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "fdp_noise/roc.h"

namespace fdp_noise {
namespace {

constexpr int kDefaultAPoints = 2001;
constexpr double kCentralTail = 5e-7;  // each side of the 99.9999% range
constexpr double kAuditTolerance = 1e-9;
constexpr double kTvBinWidth = 1.0 / 1024.0;
constexpr double kTvTail = 1e-13;
constexpr double kMaxTvBins = 4e6;

CenterMass PmfWindow(const DiscretePmf& pmf, double t) {
  // A half-open window of length t holds t integers when t is an integer and
  // ceil(t) otherwise.
  const double rounded = std::round(t);
  const int64_t m = std::fabs(t - rounded) < 1e-12
                        ? static_cast<int64_t>(rounded)
                        : static_cast<int64_t>(std::ceil(t));
  CenterMass best{0.0, 0.0};
  // Window covering j .. j + m - 1.
  for (int64_t j = pmf.lo() - m + 1; j <= pmf.hi(); ++j) {
    const double mass = pmf.Cdf(j + m - 1) - pmf.Cdf(j - 1);
    if (mass > best.sup) {
      // Centred on the covered integers.
      best = {mass, static_cast<double>(j) + 0.5 * static_cast<double>(m - 1)};
    }
  }
  return best;
}

CenterMass SampleWindow(const std::vector<double>& s, double t) {
  // The best window has a sample on its closed right end.
  CenterMass best{0.0, 0.0};
  size_t first = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    while (first < i && !(s[first] > s[i] - t)) ++first;
    size_t last = i;
    while (last + 1 < s.size() && s[last + 1] == s[i]) ++last;
    const double mass =
        static_cast<double>(last + 1 - first) / static_cast<double>(s.size());
    if (mass > best.sup) best = {mass, s[i] - 0.5 * t};
  }
  return best;
}

CenterMass OnGrid(const RivalNoise& noise, double t,
                  const std::vector<double>& a_grid) {
  CenterMass best{-1.0, 0.0};
  for (double a : a_grid) {
    const double mass = noise.HalfOpenProbability(a - 0.5 * t, a + 0.5 * t);
    if (mass > best.sup) best = {mass, a};
  }
  return best;
}

}  // namespace

absl::StatusOr<CenterMass> CenterMassSup(const NoiseSpec& spec, double t,
                                         const std::vector<double>& a_grid) {
  if (!(t > 0.0) || std::isinf(t)) {
    return absl::InvalidArgumentError(
        absl::StrCat("window length t must be positive, got ", t));
  }
  const RivalNoise& noise = spec.noise;
  if (!a_grid.empty()) return OnGrid(noise, t, a_grid);
  switch (noise.kind()) {
    case NoiseKind::kDiscretePmf:
      return PmfWindow(*noise.pmf(), t);
    case NoiseKind::kEmpiricalSamples:
      return SampleWindow(*noise.samples(), t);
    case NoiseKind::kContinuousCdf:
      break;
  }
  std::vector<double> grid;
  if (noise.grid_x() != nullptr) {
    // Piecewise-linear cdf: the window mass is piecewise linear in a with
    // breaks where an end of the window crosses a grid point.
    for (double x : *noise.grid_x()) {
      grid.push_back(x - 0.5 * t);
      grid.push_back(x + 0.5 * t);
    }
  } else {
    const double lo = *noise.Quantile(kCentralTail);
    const double hi = *noise.Quantile(1.0 - kCentralTail);
    for (int i = 0; i < kDefaultAPoints; ++i) {
      grid.push_back(lo + (hi - lo) * i / (kDefaultAPoints - 1));
    }
  }
  return OnGrid(noise, t, grid);
}

absl::StatusOr<double> AntiBound(const TradeoffFunction& f, int t) {
  absl::StatusOr<double> c = CIterated(f, t);
  if (!c.ok()) return c.status();
  return 1.0 - 2.0 * *c;
}

AuditReport AuditNoise(const NoiseSpec& spec, const TradeoffFunction& f,
                       int t_max, const std::vector<double>& a_grid) {
  AuditReport report(absl::StrFormat("anti-concentration of %s under %s",
                                     spec.noise.label(), f.label()));
  if (!f.symmetric() || !f.nontrivial()) {
    report.MarkNotApplicable("f must be symmetric and nontrivial");
    return report;
  }
  if (spec.sensitivity < 1) {
    report.MarkNotApplicable("sensitivity must be a positive integer");
    return report;
  }
  report.AddAssumption(absl::StrFormat(
      "noise is added to a statistic of sensitivity %d", spec.sensitivity));
  report.AddNote(absl::StrFormat(
      "a violation proves that %s cannot satisfy %s-DP at sensitivity %d",
      spec.noise.label(), f.label(), spec.sensitivity));
  report.AddNote("bounds hold at integer window lengths only");
  if (spec.noise.kind() == NoiseKind::kDiscretePmf) {
    report.AddNote(
        "integer noise: odd t is sup over integer a of P(|N-a| <= (t-1)/2)");
  }
  const double tolerance = kAuditTolerance + spec.noise.IntervalBand();
  const double scale = static_cast<double>(spec.sensitivity);
  for (int t = 1; t <= t_max; ++t) {
    absl::StatusOr<CenterMass> window = CenterMassSup(spec, t * scale, a_grid);
    absl::StatusOr<double> bound = AntiBound(f, t);
    if (!window.ok() || !bound.ok()) {
      report.AddNote(absl::StrCat("t=", t, " skipped: ",
                                  !window.ok() ? window.status().message()
                                               : bound.status().message()));
      continue;
    }
    report.AddUpperBoundCheck("sup_a P(-t/2<N-a<=t/2)", window->argmax_a, t,
                              *bound, window->sup, tolerance);
  }
  return report;
}

AuditReport RatioCheck(const ContinuousCnd& cnd, const NoiseSpec& rival,
                       const std::vector<double>& t_grid,
                       const std::vector<double>& a_grid) {
  AuditReport report(absl::StrFormat("concentration ratio of %s against %s",
                                     rival.noise.label(), cnd.label()));
  report.AddAssumption(absl::StrFormat("rival satisfies T(N', N' + 1) >= %s",
                                       cnd.f().label()));
  int skipped = 0;
  for (double t : t_grid) {
    const double denominator = 1.0 - 2.0 * cnd.Cdf(-t - 0.5);
    if (!(denominator > 0.0)) {
      ++skipped;
      continue;
    }
    double numerator = 0.0;
    double argmax = 0.0;
    if (t > 0.0) {
      absl::StatusOr<CenterMass> window =
          CenterMassSup(rival, 2.0 * t * rival.sensitivity, a_grid);
      if (!window.ok()) {
        report.AddNote(absl::StrCat("t=", t, " skipped: ",
                                    window.status().message()));
        continue;
      }
      numerator = window->sup;
      argmax = window->argmax_a;
    }
    report.AddUpperBoundCheck(
        "sup_a P(-t<N'-a<=t)/P(|N|<=t+1/2)", argmax, t, 1.0,
        numerator / denominator,
        kAuditTolerance + rival.noise.IntervalBand() / denominator);
  }
  if (skipped > 0) {
    report.AddNote(
        absl::StrCat(skipped, " t values skipped: P(|N|<=t+1/2) = 0"));
  }
  return report;
}

absl::StatusOr<double> TotalVariationShift(const RivalNoise& noise, double t) {
  if (!(t >= 0.0) || std::isinf(t)) {
    return absl::InvalidArgumentError(
        absl::StrCat("shift must be finite and nonnegative, got ", t));
  }
  switch (noise.kind()) {
    case NoiseKind::kEmpiricalSamples:
      return absl::InvalidArgumentError(
          "total variation of a shift needs a cdf or pmf, not samples");
    case NoiseKind::kDiscretePmf: {
      const double rounded = std::round(t);
      if (std::fabs(t - rounded) > 1e-12) return 1.0;  // disjoint supports
      return TvDiscrete(*noise.pmf(),
                        noise.pmf()->Shifted(static_cast<int64_t>(rounded)));
    }
    case NoiseKind::kContinuousCdf:
      break;
  }
  const double lo = *noise.Quantile(kTvTail);
  const double hi = *noise.Quantile(1.0 - kTvTail) + t;
  double h = kTvBinWidth;
  while ((hi - lo) / h > kMaxTvBins) h *= 2.0;
  // Edges at t/2 + k h; for symmetric unimodal noise the densities of N and
  // N + t cross at t/2, so no bin straddles the crossing.
  const double k_lo = std::floor((lo - 0.5 * t) / h);
  const double k_hi = std::ceil((hi - 0.5 * t) / h);
  double sum = 0.0;
  double left_p = noise.Cdf(0.5 * t + k_lo * h);
  double left_q = noise.Cdf(0.5 * t + k_lo * h - t);
  const double outside = left_p + left_q;
  double right_p = left_p;
  double right_q = left_q;
  for (double k = k_lo; k < k_hi; k += 1.0) {
    const double edge = 0.5 * t + (k + 1.0) * h;
    right_p = noise.Cdf(edge);
    right_q = noise.Cdf(edge - t);
    sum += std::fabs((right_p - left_p) - (right_q - left_q));
    left_p = right_p;
    left_q = right_q;
  }
  // Mass outside the bins counts fully, which can only overstate TV.
  const double beyond = outside + (1.0 - right_p) + (1.0 - right_q);
  return std::min(1.0, 0.5 * (sum + beyond));
}

}  // namespace fdp_noise
