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

#include "fdp_noise/cnd.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "fdp_noise/rng.h"

namespace fdp_noise {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kQuantileBracketDoublings = 64;
constexpr int kQuantileBisections = 80;
constexpr double kMomentTolerance = 1e-10;
constexpr int kSimpsonMaxDepth = 50;

// log((1 - c) / c); +inf when c = 0.
double EpsFromFixedPoint(double c) {
  if (c <= 0.0) return kInf;
  return std::log((1.0 - c) / c);
}

double AdaptiveSimpson(const std::function<double(double)>& g, double a,
                       double b, double fa, double fm, double fb,
                       double whole, double tolerance, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = g(lm);
  const double frm = g(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tolerance) {
    return left + right + delta / 15.0;
  }
  return AdaptiveSimpson(g, a, m, fa, flm, fm, left, 0.5 * tolerance,
                         depth - 1) +
         AdaptiveSimpson(g, m, b, fm, frm, fb, right, 0.5 * tolerance,
                         depth - 1);
}

double Integrate(const std::function<double(double)>& g, double a, double b,
                 double tolerance) {
  const double fa = g(a);
  const double fb = g(b);
  const double fm = g(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return AdaptiveSimpson(g, a, b, fa, fm, fb, whole, tolerance,
                         kSimpsonMaxDepth);
}

// int_z^inf n x^(n-1) e^{-eps (x - 1)} dx, the moment integrand's majorant
// past z.
double TailMajorantIntegral(int n, double eps, double z) {
  const double y = eps * z;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < n; ++k) {
    term *= y / k;
    sum += term;
  }
  // n (n-1)! e^{-y} sum / eps^n, times e^eps.
  return std::tgamma(n + 1.0) * std::exp(eps - y) * sum / std::pow(eps, n);
}

}  // namespace

ContinuousCnd::ContinuousCnd(TradeoffFunction f, double c_f, CdfEvaluator cdf,
                             std::string label)
    : f_(std::move(f)),
      c_f_(c_f),
      cdf_(std::make_shared<const CdfEvaluator>(std::move(cdf))),
      label_(std::move(label)) {}

absl::StatusOr<double> ContinuousCnd::Quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("quantile level must lie in (0, 1), got ", u));
  }
  double lo = -1.0;
  double hi = 1.0;
  for (int i = 0; i < kQuantileBracketDoublings && Cdf(lo) >= u; ++i) {
    lo *= 2.0;
  }
  for (int i = 0; i < kQuantileBracketDoublings && Cdf(hi) < u; ++i) {
    hi *= 2.0;
  }
  for (int i = 0; i < kQuantileBisections; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (Cdf(mid) >= u) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

absl::StatusOr<ContinuousCnd> ConstructCnd(const TradeoffFunction& f) {
  if (!f.symmetric()) {
    return absl::InvalidArgumentError(
        absl::StrCat("CND construction needs a symmetric tradeoff function; ",
                     f.label(), " is not marked symmetric"));
  }
  if (!f.nontrivial()) {
    return absl::InvalidArgumentError(
        absl::StrCat("CND construction needs a nontrivial tradeoff function; ",
                     f.label(), " is the identity"));
  }
  const double c = FixedPoint(f);
  auto left_tail = [f, c](double x) -> CdfValue {
    // x <= 0.
    if (x >= -0.5) return {c + (1.0 - 2.0 * c) * (x + 0.5)};
    const double steps = std::ceil(-x - 0.5);
    if (steps > static_cast<double>(kMaxRecurrenceSteps)) return {0.0, true};
    const int64_t n = static_cast<int64_t>(steps);
    double value = c + (1.0 - 2.0 * c) * (x + static_cast<double>(n) + 0.5);
    for (int64_t i = 0; i < n && value > 0.0; ++i) value = f(value);
    return {value};
  };
  auto cdf = [left_tail](double x) -> CdfValue {
    if (std::isnan(x)) return {std::numeric_limits<double>::quiet_NaN()};
    if (x == 0.0) return {0.5};
    if (x < 0.0) return left_tail(x);
    const CdfValue mirror = left_tail(-x);
    return {1.0 - mirror.value, mirror.clamped};
  };
  return ContinuousCnd(f, c, cdf, absl::StrCat("cnd(", f.label(), ")"));
}

std::vector<double> SampleCnd(const ContinuousCnd& cnd, uint64_t seed,
                              size_t n) {
  const CounterUniform uniform(seed);
  std::vector<double> draws(n);
  for (size_t i = 0; i < n; ++i) {
    // Uniform() never returns 0 or 1, so the quantile always exists.
    draws[i] = *cnd.Quantile(uniform.Uniform(i));
  }
  return draws;
}

absl::StatusOr<double> Concentration(const ContinuousCnd& cnd, int t) {
  if (t < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("t must be a nonnegative integer, got ", t));
  }
  if (t == 0) return 0.0;
  const double start = (t % 2 == 1) ? cnd.c_f() : 0.5;
  return 1.0 - 2.0 * ApplyIterated(cnd.f(), t / 2, start);
}

double AbsoluteMoment(const ContinuousCnd& cnd, int n, double* truncation) {
  const double eps = EpsFromFixedPoint(cnd.c_f());
  // Past this point the tail bound is below 1e-14; with c_f = 0 the
  // support is inside [-1/2, 1/2].
  const double end =
      std::isinf(eps) ? 1.0 : 1.0 + 14.0 * std::numbers::ln10 / eps;
  const auto integrand = [&cnd, n](double x) {
    const double tail = 2.0 * cnd.Cdf(-x);
    return n * std::pow(x, n - 1) * tail;
  };
  // The cdf has kinks at half-integers.
  const int pieces = static_cast<int>(std::ceil(2.0 * end));
  double total = 0.0;
  for (int i = 0; i < pieces; ++i) {
    total += Integrate(integrand, 0.5 * i, 0.5 * (i + 1),
                       kMomentTolerance / pieces);
  }
  if (truncation != nullptr) {
    *truncation =
        std::isinf(eps) ? 0.0 : TailMajorantIntegral(n, eps, 0.5 * pieces);
  }
  return total;
}

AuditReport TailAndMomentCheck(const ContinuousCnd& cnd, double t_max,
                               int n_max, int t_points) {
  AuditReport report(absl::StrCat("sub-exponential tails: ", cnd.label()));
  const double c = cnd.c_f();
  if (c <= 0.0) {
    report.MarkNotApplicable("c_f = 0, so eps_f is infinite");
    return report;
  }
  const double eps = EpsFromFixedPoint(c);
  report.AddNote(absl::StrFormat("c_f = %.12g, eps_f = %.12g", c, eps));
  // Pure-DP curves meet the floor bound with equality at integers.
  constexpr double kRelativeTolerance = 1e-12;
  t_points = std::max(t_points, 2);
  for (int i = 0; i < t_points; ++i) {
    const double t = t_max * i / (t_points - 1);
    const double tail = 2.0 * cnd.Cdf(-t);
    const double floor_bound = std::exp(-eps * std::floor(t));
    const double shifted_bound = std::exp(-eps * (t - 1.0));
    report.AddUpperBoundCheck("P(|N|>t)<=exp(-eps*floor(t))", std::nullopt, t,
                              floor_bound, tail,
                              kRelativeTolerance * floor_bound);
    report.AddUpperBoundCheck("P(|N|>t)<=exp(-eps*(t-1))", std::nullopt, t,
                              shifted_bound, tail,
                              kRelativeTolerance * shifted_bound);
  }
  for (int n = 1; n <= n_max; ++n) {
    double truncation = 0.0;
    const double moment = AbsoluteMoment(cnd, n, &truncation);
    const double bound = std::pow(eps, -n) * std::exp(eps) * std::tgamma(n + 1.0);
    // The neglected tail is added so the comparison stays conservative.
    report.AddUpperBoundCheck(absl::StrCat("E|N|^", n), std::nullopt,
                              std::nullopt, bound, moment + truncation,
                              kMomentTolerance);
  }
  return report;
}

absl::StatusOr<double> TulapReferenceCdf(double eps, double x) {
  if (!(eps > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("Tulap eps must be positive, got ", eps));
  }
  if (x == 0.0) return 0.5;
  if (x > 0.0) {
    absl::StatusOr<double> mirror = TulapReferenceCdf(eps, -x);
    if (!mirror.ok()) return mirror.status();
    return 1.0 - *mirror;
  }
  // x < 0, so the integer part k = floor(x + 1/2) is <= 0.
  const double q = std::exp(-eps);
  const double k = std::floor(x + 0.5);
  const double below = std::pow(q, 1.0 - k) / (1.0 + q);  // P(Z <= k - 1)
  const double at = (1.0 - q) / (1.0 + q) * std::pow(q, -k);
  return below + at * (x - (k - 0.5));
}

absl::StatusOr<double> TulapVariance(double eps) {
  if (!(eps > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("Tulap eps must be positive, got ", eps));
  }
  const double q = std::exp(-eps);
  return 2.0 * q / ((1.0 - q) * (1.0 - q)) + 1.0 / 12.0;
}

AuditReport VerifyContinuousCnd(const ContinuousCnd& cnd, double x_min,
                                double x_max, int points, double tolerance) {
  AuditReport report(absl::StrCat("CND properties: ", cnd.label()));
  const TradeoffFunction& f = cnd.f();
  report.AddUpperBoundCheck("F(0)=1/2", 0.0, std::nullopt, 0.0,
                            std::fabs(cnd.Cdf(0.0) - 0.5), tolerance);
  report.AddUpperBoundCheck("F(-1/2)=c_f", -0.5, std::nullopt, 0.0,
                            std::fabs(cnd.Cdf(-0.5) - cnd.c_f()), tolerance);
  points = std::max(points, 2);
  WorstUpperBound symmetry, recurrence, monotone;
  int clamped = 0;
  double previous = 0.0;
  for (int i = 0; i < points; ++i) {
    const double x = x_min + (x_max - x_min) * i / (points - 1);
    const CdfValue fx = cnd.CdfWithFlag(x);
    if (fx.clamped) ++clamped;
    symmetry.Offer(x, std::nullopt, 0.0,
                   std::fabs(cnd.Cdf(-x) - (1.0 - fx.value)), tolerance);
    const double next = cnd.Cdf(x + 1.0);
    if (next < 1.0) {
      recurrence.Offer(x, std::nullopt, 0.0, std::fabs(fx.value - f(next)),
                       tolerance);
    }
    if (i > 0) monotone.Offer(x, std::nullopt, fx.value, previous, tolerance);
    previous = fx.value;
  }
  symmetry.AddTo(report, "F(-x)=1-F(x)");
  recurrence.AddTo(report, "F(x)=f(F(x+1))");
  monotone.AddTo(report, "non-decreasing");
  if (clamped > 0) {
    report.AddNote(absl::StrCat(clamped,
                                " grid points hit the recurrence step cap"));
  }
  return report;
}

}  // namespace fdp_noise
