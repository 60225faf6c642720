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

#include "fdp_noise/tradeoff.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "fdp_noise/normal.h"

namespace fdp_noise {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBisectionWidth = 1e-12;
constexpr int kBisectionMaxIterations = 200;

}  // namespace

TradeoffFunction::TradeoffFunction(Evaluator evaluator, bool symmetric,
                                   bool nontrivial,
                                   std::optional<double> closed_form_cf,
                                   std::string label)
    : evaluator_(std::make_shared<const Evaluator>(std::move(evaluator))),
      symmetric_(symmetric),
      nontrivial_(nontrivial),
      closed_form_cf_(closed_form_cf),
      label_(std::move(label)) {}

double TradeoffFunction::operator()(double alpha) const {
  alpha = std::clamp(alpha, 0.0, 1.0);
  const double value = (*evaluator_)(alpha);
  return std::clamp(value, 0.0, alpha);
}

absl::StatusOr<double> TradeoffFunction::Evaluate(double alpha) const {
  if (!(alpha >= -kAlphaSlack && alpha <= 1.0 + kAlphaSlack)) {
    return absl::InvalidArgumentError(
        absl::StrCat("alpha=", alpha, " is outside [0, 1]"));
  }
  return (*this)(alpha);
}

TradeoffFunction TradeoffFunction::WithoutClosedForm() const {
  TradeoffFunction copy = *this;
  copy.closed_form_cf_.reset();
  return copy;
}

absl::StatusOr<TradeoffFunction> MakeEpsDelta(double eps, double delta) {
  if (!(eps >= 0.0) || std::isinf(eps)) {
    return absl::InvalidArgumentError(
        absl::StrCat("eps must be finite and nonnegative, got ", eps));
  }
  if (!(delta >= 0.0 && delta <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("delta must lie in [0, 1], got ", delta));
  }
  const double growth = std::exp(eps);
  const double decay = std::exp(-eps);
  auto eval = [growth, decay, delta](double alpha) {
    const double rest = 1.0 - alpha;
    const double steep = rest == 0.0 ? 1.0 - delta : (1.0 - delta) - growth * rest;
    const double shallow = (alpha - delta) * decay;
    return std::max({0.0, steep, shallow});
  };
  // Both linear pieces cross the anti-diagonal at the same point.
  const double cf = (1.0 - delta) / (1.0 + growth);
  return TradeoffFunction(eval, /*symmetric=*/true,
                          /*nontrivial=*/eps > 0.0 || delta > 0.0, cf,
                          absl::StrFormat("f_{%g,%g}", eps, delta));
}

absl::StatusOr<TradeoffFunction> MakeGdp(double mu) {
  if (!(mu >= 0.0) || std::isinf(mu)) {
    return absl::InvalidArgumentError(
        absl::StrCat("mu must be finite and nonnegative, got ", mu));
  }
  auto eval = [mu](double alpha) {
    return StandardNormalCdf(StandardNormalQuantile(alpha) - mu);
  };
  return TradeoffFunction(eval, /*symmetric=*/true, /*nontrivial=*/mu > 0.0,
                          StandardNormalCdf(-mu / 2.0),
                          absl::StrFormat("G_%g", mu));
}

TradeoffFunction Identity() {
  return TradeoffFunction([](double alpha) { return alpha; },
                          /*symmetric=*/true, /*nontrivial=*/false, 0.5,
                          "identity");
}

double ApplyIterated(const TradeoffFunction& f, int k, double alpha) {
  for (int i = 0; i < k; ++i) {
    if (alpha == 0.0) break;  // f(0) = 0
    alpha = f(alpha);
  }
  return alpha;
}

absl::StatusOr<TradeoffFunction> Iterate(const TradeoffFunction& f, int k) {
  if (k < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("iteration count must be >= 1, got ", k));
  }
  if (k == 1) return f.WithoutClosedForm();
  return TradeoffFunction(
      [f, k](double alpha) { return ApplyIterated(f, k, alpha); },
      f.symmetric(), f.nontrivial(), std::nullopt,
      absl::StrCat(f.label(), "^", k));
}

double BisectFixedPoint(const TradeoffFunction& f) {
  double lo = 0.0;
  double hi = 0.5;
  for (int i = 0; i < kBisectionMaxIterations && hi - lo > kBisectionWidth;
       ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(1.0 - mid) - mid > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double FixedPoint(const TradeoffFunction& f) {
  if (f.closed_form_cf().has_value()) return *f.closed_form_cf();
  return BisectFixedPoint(f);
}

absl::StatusOr<double> CIterated(const TradeoffFunction& f, int t) {
  if (t < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("t must be a positive integer, got ", t));
  }
  if (!f.symmetric() || !f.nontrivial()) {
    return absl::InvalidArgumentError(
        "parity formula requires a symmetric nontrivial tradeoff function");
  }
  const int k = t / 2;
  const double start = (t % 2 == 1) ? FixedPoint(f) : 0.5;
  return ApplyIterated(f, k, start);
}

absl::StatusOr<ScalarSummaries> Summarize(const TradeoffFunction& f) {
  if (!f.symmetric()) {
    return absl::InvalidArgumentError(
        "scalar summaries require a symmetric tradeoff function");
  }
  const double c = FixedPoint(f);
  const double tv = 1.0 - 2.0 * c;
  absl::StatusOr<TradeoffFunction> lower = MakeEpsDelta(0.0, tv);
  if (!lower.ok()) return lower.status();
  if (c <= 0.0) {
    absl::StatusOr<TradeoffFunction> zero = MakeEpsDelta(0.0, 1.0);
    if (!zero.ok()) return zero.status();
    return ScalarSummaries{c, tv, kInf, *std::move(lower), *std::move(zero)};
  }
  const double eps_f = std::log((1.0 - c) / c);
  absl::StatusOr<TradeoffFunction> upper = MakeEpsDelta(eps_f, 0.0);
  if (!upper.ok()) return upper.status();
  return ScalarSummaries{c, tv, eps_f, *std::move(lower), *std::move(upper)};
}

AuditReport CheckTradeoffValidity(const TradeoffFunction& f, int points,
                                  double tolerance) {
  AuditReport report(absl::StrCat("tradeoff validity: ", f.label()));
  points = std::max(points, 3);
  std::vector<double> alpha(points), value(points);
  for (int i = 0; i < points; ++i) {
    alpha[i] = static_cast<double>(i) / (points - 1);
    value[i] = f(alpha[i]);
  }
  report.AddUpperBoundCheck("f(0)=0", 0.0, std::nullopt, 0.0, value[0],
                            tolerance);
  WorstUpperBound below_diagonal, monotone, convex;
  for (int i = 0; i < points; ++i) {
    below_diagonal.Offer(alpha[i], std::nullopt, alpha[i], value[i],
                         tolerance);
    if (i > 0) {
      monotone.Offer(alpha[i], std::nullopt, value[i], value[i - 1],
                     tolerance);
    }
    if (i > 0 && i + 1 < points) {
      convex.Offer(alpha[i], std::nullopt,
                   0.5 * (value[i - 1] + value[i + 1]), value[i], tolerance);
    }
  }
  below_diagonal.AddTo(report, "f(alpha)<=alpha");
  monotone.AddTo(report, "non-decreasing");
  convex.AddTo(report, "midpoint convexity");
  return report;
}

absl::StatusOr<TradeoffFamily> MakeLogConcaveFamily(
    std::function<double(double)> base_cdf,
    std::function<double(double)> base_quantile, std::string label) {
  constexpr double kTolerance = 1e-9;
  double previous = -kInf;
  for (int i = -400; i <= 400; ++i) {
    const double x = 0.025 * i;
    const double fx = base_cdf(x);
    if (!(fx >= 0.0 && fx <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("base cdf of ", label, " leaves [0, 1] at x=", x));
    }
    if (fx < previous - kTolerance) {
      return absl::InvalidArgumentError(
          absl::StrCat("base cdf of ", label, " decreases at x=", x));
    }
    previous = fx;
    if (std::fabs(base_cdf(-x) - (1.0 - fx)) > kTolerance) {
      return absl::InvalidArgumentError(absl::StrCat(
          "base cdf of ", label, " is not symmetric about 0 at x=", x));
    }
  }
  for (int i = 1; i < 100; ++i) {
    const double u = i / 100.0;
    if (std::fabs(base_cdf(base_quantile(u)) - u) > kTolerance) {
      return absl::InvalidArgumentError(absl::StrCat(
          "base quantile of ", label, " does not invert the cdf at u=", u));
    }
  }
  auto cdf = std::make_shared<const std::function<double(double)>>(
      std::move(base_cdf));
  auto quantile = std::make_shared<const std::function<double(double)>>(
      std::move(base_quantile));
  auto member = [cdf, quantile, label](double t) {
    return TradeoffFunction(
        [cdf, quantile, t](double alpha) {
          return (*cdf)((*quantile)(alpha) - t);
        },
        /*symmetric=*/true, /*nontrivial=*/t > 0.0, std::nullopt,
        absl::StrFormat("%s[t=%g]", label, t));
  };
  return TradeoffFamily(member, label);
}

namespace {

TradeoffFamily BuiltIn(absl::StatusOr<TradeoffFamily> family) {
  // Built-in bases are valid by construction.
  return *std::move(family);
}

}  // namespace

TradeoffFamily GaussianFamily(double mu) {
  return BuiltIn(MakeLogConcaveFamily(
      [mu](double x) { return StandardNormalCdf(mu * x); },
      [mu](double u) { return StandardNormalQuantile(u) / mu; },
      absl::StrFormat("gaussian(mu=%g)", mu)));
}

TradeoffFamily LaplaceFamily() {
  return BuiltIn(MakeLogConcaveFamily(
      [](double x) {
        return x < 0.0 ? 0.5 * std::exp(x) : 1.0 - 0.5 * std::exp(-x);
      },
      [](double u) {
        if (u <= 0.0) return -kInf;
        if (u >= 1.0) return kInf;
        return u < 0.5 ? std::log(2.0 * u) : -std::log(2.0 * (1.0 - u));
      },
      "laplace"));
}

TradeoffFamily LogisticFamily() {
  return BuiltIn(MakeLogConcaveFamily(
      [](double x) {
        if (x < 0.0) {
          const double e = std::exp(x);
          return e / (1.0 + e);
        }
        return 1.0 / (1.0 + std::exp(-x));
      },
      [](double u) {
        if (u <= 0.0) return -kInf;
        if (u >= 1.0) return kInf;
        return std::log(u) - std::log1p(-u);
      },
      "logistic"));
}

TradeoffFamily UniformFamily() {
  return BuiltIn(MakeLogConcaveFamily(
      [](double x) { return std::clamp(0.5 * (x + 1.0), 0.0, 1.0); },
      [](double u) { return 2.0 * std::clamp(u, 0.0, 1.0) - 1.0; },
      "uniform"));
}

AuditReport CheckDivisibility(const TradeoffFamily& family,
                              double tolerance) {
  AuditReport report(absl::StrCat("infinite divisibility: ", family.label()));
  constexpr std::array<double, 4> kShifts = {0.25, 0.5, 1.0, 2.0};
  constexpr int kAlphas = 101;

  const TradeoffFunction zero = family.member(0.0);
  WorstUpperBound identity;
  for (int i = 0; i < kAlphas; ++i) {
    const double alpha = static_cast<double>(i) / (kAlphas - 1);
    identity.Offer(alpha, std::nullopt, 0.0, std::fabs(zero(alpha) - alpha),
                   tolerance);
  }
  identity.AddTo(report, "f_0=identity");

  for (double s : kShifts) {
    const TradeoffFunction fs = family.member(s);
    for (double t : kShifts) {
      const TradeoffFunction ft = family.member(t);
      const TradeoffFunction fst = family.member(s + t);
      WorstUpperBound composed;
      for (int i = 0; i < kAlphas; ++i) {
        const double alpha = static_cast<double>(i) / (kAlphas - 1);
        composed.Offer(alpha, std::nullopt, 0.0,
                       std::fabs(fs(ft(alpha)) - fst(alpha)), tolerance);
      }
      composed.AddTo(report,
                     absl::StrFormat("f_%g o f_%g = f_%g", s, t, s + t));
    }
  }
  return report;
}

}  // namespace fdp_noise
