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
#include <limits>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "fdp_noise/normal.h"
#include "fdp_noise/rng.h"
#include "fdp_noise/roc.h"

namespace fdp_noise {
namespace {

constexpr int64_t kMaxHalfSupport = 10000000;
constexpr double kIntervalSlack = 1e-12;

// left[j] is the mass at -j (and at +j); `tail` is the mass cut on each side.
absl::StatusOr<DiscretePmf> SymmetricPmf(const std::vector<double>& left,
                                         double tail) {
  const int64_t extent = static_cast<int64_t>(left.size()) - 1;
  std::vector<double> mass(2 * left.size() - 1);
  for (int64_t x = -extent; x <= extent; ++x) {
    mass[static_cast<size_t>(x + extent)] = left[static_cast<size_t>(std::abs(x))];
  }
  return DiscretePmf::Create(-extent, std::move(mass), tail, tail);
}

absl::Status SupportTooWide(const std::string& what) {
  return absl::ResourceExhaustedError(absl::StrCat(
      what, ": tail mass stays above ", kTailCut, " beyond |x| = ",
      kMaxHalfSupport));
}

// Builds the left half from a cdf on the integers, P(N <= x) for x <= 0.
absl::StatusOr<DiscretePmf> FromLeftCdf(const std::function<double(int64_t)>& cdf,
                                        const std::string& what) {
  std::vector<double> left;
  double upper = 1.0 - cdf(-1);  // F(0) by symmetry
  for (int64_t x = 0;; --x) {
    const double below = cdf(x - 1);
    left.push_back(upper - below);
    if (below < kTailCut) return SymmetricPmf(left, below);
    if (-x >= kMaxHalfSupport) return SupportTooWide(what);
    upper = below;
  }
}

}  // namespace

absl::StatusOr<DiscreteCnd> RoundCnd(const ContinuousCnd& cnd, int delta) {
  if (delta < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("delta must be a positive integer, got ", delta));
  }
  const double scale = static_cast<double>(delta);
  absl::StatusOr<DiscretePmf> pmf = FromLeftCdf(
      [&cnd, scale](int64_t x) {
        return cnd.Cdf((static_cast<double>(x) + 0.5) / scale);
      },
      "rounded CND");
  if (!pmf.ok()) return pmf.status();
  return DiscreteCnd{*std::move(pmf), cnd.f(), delta};
}

absl::StatusOr<DiscreteCnd> UniqueSens1(const TradeoffFunction& f) {
  if (!f.symmetric() || !f.nontrivial()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "sensitivity-1 CND needs a symmetric nontrivial tradeoff function; ",
        f.label(), " is not"));
  }
  const double c = FixedPoint(f);
  double upper = 1.0 - c;  // f^x(1 - c_f) = P(N <= -x)
  double lower = c;        // f^x(c_f) = P(N <= -x - 1)
  std::vector<double> left;
  for (int64_t x = 0;; ++x) {
    left.push_back(upper - lower);
    if (lower < kTailCut) {
      absl::StatusOr<DiscretePmf> pmf = SymmetricPmf(left, lower);
      if (!pmf.ok()) return pmf.status();
      return DiscreteCnd{*std::move(pmf), f, 1};
    }
    if (x >= kMaxHalfSupport) return SupportTooWide("sensitivity-1 CND");
    upper = f(upper);
    lower = f(lower);
  }
}

double JacobiTheta3AtZero(double q, int64_t terms) {
  double sum = 0.0;
  for (int64_t k = terms; k >= 1; --k) {  // small terms first
    sum += std::pow(q, static_cast<double>(k) * static_cast<double>(k));
  }
  return 1.0 + 2.0 * sum;
}

absl::StatusOr<DiscretePmf> DiscreteLaplace(double eps) {
  if (!(eps > 0.0) || std::isinf(eps)) {
    return absl::InvalidArgumentError(
        absl::StrCat("discrete Laplace eps must be positive, got ", eps));
  }
  const double q = std::exp(-eps);
  return FromLeftCdf(
      [q](int64_t x) { return std::pow(q, static_cast<double>(-x)) / (1.0 + q); },
      "discrete Laplace");
}

absl::StatusOr<DiscretePmf> RoundedGaussian(double sigma) {
  if (!(sigma > 0.0) || std::isinf(sigma)) {
    return absl::InvalidArgumentError(
        absl::StrCat("sigma must be positive, got ", sigma));
  }
  return FromLeftCdf(
      [sigma](int64_t x) {
        return StandardNormalCdf((static_cast<double>(x) + 0.5) / sigma);
      },
      "rounded Gaussian");
}

absl::StatusOr<DiscretePmf> DiscreteGaussian(double sigma) {
  if (!(sigma > 0.0) || std::isinf(sigma)) {
    return absl::InvalidArgumentError(
        absl::StrCat("sigma must be positive, got ", sigma));
  }
  const int64_t terms = static_cast<int64_t>(std::ceil(10.0 * sigma + 20.0));
  const double q = std::exp(-1.0 / (2.0 * sigma * sigma));
  const double theta = JacobiTheta3AtZero(q, terms);
  std::vector<double> term(terms + 1);
  for (int64_t k = 0; k <= terms; ++k) {
    term[k] = std::pow(q, static_cast<double>(k) * static_cast<double>(k)) /
              theta;
  }
  // Tail beyond k, summed from the far end.
  std::vector<double> tail(terms + 2, 0.0);
  for (int64_t k = terms; k >= 0; --k) tail[k] = tail[k + 1] + term[k];
  int64_t extent = 0;
  while (extent < terms && tail[extent + 1] >= kTailCut) ++extent;
  std::vector<double> left(term.begin(), term.begin() + extent + 1);
  return SymmetricPmf(left, tail[extent + 1]);
}

absl::StatusOr<DiscretePmf> NamedDistribution(std::string_view name,
                                              double scale) {
  if (name == "discrete-laplace") return DiscreteLaplace(scale);
  if (name == "rounded-gaussian") return RoundedGaussian(scale);
  if (name == "discrete-gaussian") return DiscreteGaussian(scale);
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown distribution \"", std::string(name),
      "\"; expected discrete-laplace, rounded-gaussian or discrete-gaussian"));
}

ClosedInterval Sens2PureDpInterval(double eps) {
  const double g = std::exp(eps);
  return {2.0 * g / (3.0 * g + 1.0), (g + 1.0) / (g + 3.0)};
}

absl::StatusOr<DiscreteCnd> Sens2Candidate(double eps, double f0) {
  absl::StatusOr<TradeoffFunction> f = MakeEpsDelta(eps, 0.0);
  if (!f.ok()) return f.status();
  if (!(eps > 0.0)) {
    return absl::InvalidArgumentError("eps must be positive");
  }
  if (!(f0 >= 0.5 && f0 <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("F(0) must lie in [1/2, 1], got ", f0));
  }
  // F(-2k) = f^k(F0) and F(-2k - 1) = f^k(1 - F0).
  std::vector<double> cdf = {f0, 1.0 - f0};  // F(0), F(-1), F(-2), ...
  while (cdf.back() >= kTailCut) {
    if (static_cast<int64_t>(cdf.size()) > kMaxHalfSupport) {
      return SupportTooWide("delta = 2 construction");
    }
    cdf.push_back((*f)(cdf[cdf.size() - 2]));
  }
  std::vector<double> left(cdf.size() - 1);
  left[0] = 2.0 * f0 - 1.0;
  for (size_t j = 1; j < left.size(); ++j) {
    left[j] = cdf[j] - cdf[j + 1];
    if (left[j] < 0.0) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "F(0)=%.10g implies negative mass %.3g at x=-%d", f0, left[j],
          static_cast<int>(j)));
    }
  }
  absl::StatusOr<DiscretePmf> pmf = SymmetricPmf(left, cdf.back());
  if (!pmf.ok()) return pmf.status();
  return DiscreteCnd{*std::move(pmf), *std::move(f), 2};
}

absl::StatusOr<DiscreteCnd> Sens2PureDp(double eps, double f0) {
  if (!(eps > 0.0) || std::isinf(eps)) {
    return absl::InvalidArgumentError(
        absl::StrCat("eps must be positive and finite, got ", eps));
  }
  const ClosedInterval valid = Sens2PureDpInterval(eps);
  if (!(f0 >= valid.lo - kIntervalSlack && f0 <= valid.hi + kIntervalSlack)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "F(0)=%.10g is outside the valid interval [%.10g, %.10g] for eps=%g",
        f0, valid.lo, valid.hi, eps));
  }
  return Sens2Candidate(eps, f0);
}

AuditReport VerifyDiscreteCnd(const DiscreteCnd& candidate,
                              double tolerance) {
  const DiscretePmf& pmf = candidate.pmf;
  const TradeoffFunction& f = candidate.f;
  AuditReport report(absl::StrFormat("discrete CND for %s at delta=%d",
                                     f.label(), candidate.delta));
  if (candidate.delta < 1) {
    report.MarkNotApplicable("delta must be a positive integer");
    return report;
  }
  if (pmf.truncated_mass() > 0.0) {
    report.AddNote(absl::StrFormat(
        "support [%d, %d] after cutting tails of total mass %.3g",
        pmf.lo(), pmf.hi(), pmf.truncated_mass()));
  }
  for (int t = 1; t <= candidate.delta; ++t) {
    absl::StatusOr<RocCurve> roc = ShiftRoc(pmf, t);
    if (!roc.ok()) {
      report.AddNote(absl::StrCat("ROC for shift ", t, " failed: ",
                                  roc.status().message()));
      report.AddLowerBoundCheck("T(N,N+t)>=f", std::nullopt, t, 0.0, -1.0,
                                0.0);
      continue;
    }
    const DominanceResult d = Dominates(*roc, f, tolerance);
    report.AddLowerBoundCheck("T(N,N+t)>=f", d.worst_alpha, t, d.f_value,
                              d.curve_value, tolerance);
  }
  WorstUpperBound recurrence;
  for (int64_t t = pmf.lo() - candidate.delta; t <= pmf.hi(); ++t) {
    const double next = pmf.Cdf(t + candidate.delta);
    if (next >= 1.0) continue;
    recurrence.Offer(static_cast<double>(t), std::nullopt, 0.0,
                     std::fabs(f(next) - pmf.Cdf(t)), tolerance);
  }
  recurrence.AddTo(report, "f(F(t+delta))=F(t)");
  WorstUpperBound symmetry;
  const int64_t extent = std::max(std::abs(pmf.lo()), std::abs(pmf.hi()));
  for (int64_t x = 0; x <= extent; ++x) {
    symmetry.Offer(static_cast<double>(x), std::nullopt, 0.0,
                   std::fabs(pmf.Mass(x) - pmf.Mass(-x)), tolerance);
  }
  symmetry.AddTo(report, "P(N=x)=P(N=-x)");
  return report;
}

AuditReport DominanceAuditDiscrete(
    const DiscreteCnd& dcnd, const DiscretePmf& rival, int64_t a_lo,
    int64_t a_hi, int t_max,
    const std::optional<std::function<double(double)>>& phi) {
  const TradeoffFunction& f = dcnd.f;
  AuditReport report(
      absl::StrCat("integer stochastic dominance for ", f.label()));
  if (dcnd.delta != 1) {
    report.MarkNotApplicable("the dominance result covers delta = 1 only");
    return report;
  }
  report.AddAssumption(
      "rival satisfies T(N', N' + 1) >= f; re-checked below on its exact ROC "
      "curve");
  absl::StatusOr<RocCurve> roc = ShiftRoc(rival, 1);
  if (roc.ok()) {
    const DominanceResult d = Dominates(*roc, f, 1e-9);
    report.AddLowerBoundCheck("rival T(N',N'+1)>=f", d.worst_alpha, 1.0,
                              d.f_value, d.curve_value, 1e-9);
  } else {
    report.AddNote(absl::StrCat("rival ROC failed: ", roc.status().message()));
  }
  const double c = FixedPoint(f);
  const double slack = 1e-9 + dcnd.pmf.truncated_mass() + rival.truncated_mass();
  for (int t = 0; t <= t_max; ++t) {
    const double bound = 1.0 - 2.0 * ApplyIterated(f, t, c);
    for (int64_t a = a_lo; a <= a_hi; ++a) {
      const double achieved = rival.Cdf(a + t) - rival.Cdf(a - t - 1);
      report.AddUpperBoundCheck("P(|N'-a|<=t)<=1-2f^t(c_f)",
                                static_cast<double>(a), t, bound, achieved,
                                slack);
    }
  }
  if (phi.has_value()) {
    double own = 0.0;
    for (int64_t x = dcnd.pmf.lo(); x <= dcnd.pmf.hi(); ++x) {
      own += dcnd.pmf.Mass(x) * (*phi)(std::fabs(static_cast<double>(x)));
    }
    for (int64_t a = a_lo; a <= a_hi; ++a) {
      double theirs = 0.0;
      for (int64_t x = rival.lo(); x <= rival.hi(); ++x) {
        theirs += rival.Mass(x) * (*phi)(std::fabs(static_cast<double>(x - a)));
      }
      report.AddLowerBoundCheck("E phi(|N'-a|)>=E phi(|N|)",
                                static_cast<double>(a), std::nullopt, own,
                                theirs, 1e-12 * std::max(1.0, own));
    }
  }
  return report;
}

absl::StatusOr<double> Moment(const DiscretePmf& pmf, int k) {
  if (k < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("moment order must be >= 1, got ", k));
  }
  if (k % 2 == 1 && pmf.IsSymmetric(0.0)) return 0.0;
  double total = 0.0;
  for (int64_t x = pmf.lo(); x <= pmf.hi(); ++x) {
    total += std::pow(static_cast<double>(x), k) * pmf.Mass(x);
  }
  return total;
}

std::vector<int64_t> SampleDiscrete(const DiscreteCnd& dcnd, uint64_t seed,
                                    size_t n) {
  const DiscretePmf& pmf = dcnd.pmf;
  const CounterUniform uniform(seed);
  std::vector<int64_t> draws(n);
  for (size_t i = 0; i < n; ++i) {
    const double u = uniform.Uniform(i);
    int64_t lo = pmf.lo() - 1;
    int64_t hi = pmf.hi();
    // Smallest x in the support with F(x) >= u; u past the stored mass maps
    // to the last support point.
    while (hi - lo > 1) {
      const int64_t mid = lo + (hi - lo) / 2;
      if (pmf.Cdf(mid) >= u) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    draws[i] = std::max(hi, pmf.lo());
  }
  return draws;
}

}  // namespace fdp_noise
