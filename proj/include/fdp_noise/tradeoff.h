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

// Tradeoff functions in the specificity convention: f(alpha) is the smallest
// type II error of a test whose specificity (one minus type I error) is at
// least alpha. Valid tradeoff functions are convex, continuous,
// non-decreasing and satisfy f(alpha) <= alpha.

#ifndef FDP_NOISE_TRADEOFF_H_
#define FDP_NOISE_TRADEOFF_H_

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "absl/status/statusor.h"
#include "fdp_noise/audit_report.h"

namespace fdp_noise {

// Inputs within this distance outside [0, 1] are clamped; anything further
// out is rejected by TradeoffFunction::Evaluate.
inline constexpr double kAlphaSlack = 1e-12;

class TradeoffFunction {
 public:
  using Evaluator = std::function<double(double)>;

  TradeoffFunction(Evaluator evaluator, bool symmetric, bool nontrivial,
                   std::optional<double> closed_form_cf, std::string label);

  // Evaluates at alpha clamped to [0, 1]. The result is clamped to
  // [0, alpha], which only ever removes round-off.
  double operator()(double alpha) const;
  // Like operator() but rejects alpha outside [-kAlphaSlack, 1 + kAlphaSlack].
  absl::StatusOr<double> Evaluate(double alpha) const;

  bool symmetric() const { return symmetric_; }
  bool nontrivial() const { return nontrivial_; }
  const std::optional<double>& closed_form_cf() const {
    return closed_form_cf_;
  }
  const std::string& label() const { return label_; }

  // Same curve without the closed-form fixed point, so FixedPoint() has to
  // solve for it.
  TradeoffFunction WithoutClosedForm() const;

 private:
  std::shared_ptr<const Evaluator> evaluator_;
  bool symmetric_;
  bool nontrivial_;
  std::optional<double> closed_form_cf_;
  std::string label_;
};

// f_{eps,delta}(alpha) = max{0, 1 - delta - e^eps (1 - alpha),
//                            e^-eps (alpha - delta)}.
absl::StatusOr<TradeoffFunction> MakeEpsDelta(double eps, double delta);

// G_mu(alpha) = Phi(Phi^{-1}(alpha) - mu).
absl::StatusOr<TradeoffFunction> MakeGdp(double mu);

TradeoffFunction Identity();

// k-fold self composition f o ... o f.
absl::StatusOr<TradeoffFunction> Iterate(const TradeoffFunction& f, int k);

// Applies f to `alpha` k times (k >= 0).
double ApplyIterated(const TradeoffFunction& f, int k, double alpha);

// The unique c in [0, 1/2] with f(1 - c) = c. Uses the closed form when the
// function carries one, otherwise BisectFixedPoint.
double FixedPoint(const TradeoffFunction& f);
// Bisection on h(c) = f(1 - c) - c over [0, 1/2]; h is strictly decreasing.
double BisectFixedPoint(const TradeoffFunction& f);

// Fixed point of f^{o t} via the parity formula: f^{o k}(c_f) for t = 2k + 1
// and f^{o k}(1/2) for t = 2k.
absl::StatusOr<double> CIterated(const TradeoffFunction& f, int t);

struct ScalarSummaries {
  double fixed_point;
  double total_variation;  // 1 - 2 c_f
  double eps_f;            // log((1 - c_f) / c_f), +inf when c_f = 0
  TradeoffFunction lower_bound;  // f_{0, 1 - 2 c_f}
  TradeoffFunction upper_bound;  // f_{eps_f, 0}, the zero curve when c_f = 0
};

absl::StatusOr<ScalarSummaries> Summarize(const TradeoffFunction& f);

// Grid validation: f(0) = 0, f(alpha) <= alpha, monotonicity and midpoint
// convexity on `points` equally spaced alphas.
AuditReport CheckTradeoffValidity(const TradeoffFunction& f, int points = 1000,
                                  double tolerance = 1e-9);

// Collection {f_t : t >= 0} closed under composition.
class TradeoffFamily {
 public:
  using Member = std::function<TradeoffFunction(double)>;

  TradeoffFamily(Member member, std::string label)
      : member_(std::make_shared<const Member>(std::move(member))),
        label_(std::move(label)) {}

  // Requires t >= 0.
  TradeoffFunction member(double t) const { return (*member_)(t); }
  const std::string& label() const { return label_; }

 private:
  std::shared_ptr<const Member> member_;
  std::string label_;
};

// Shift family of a symmetric continuous distribution with cdf F:
// f_t(alpha) = F(F^{-1}(alpha) - t). Rejects a cdf that fails symmetry or
// monotonicity on a validation grid.
absl::StatusOr<TradeoffFamily> MakeLogConcaveFamily(
    std::function<double(double)> base_cdf,
    std::function<double(double)> base_quantile, std::string label);

// Built-in bases. The Gaussian family with parameter mu has members G_{mu t}.
TradeoffFamily GaussianFamily(double mu = 1.0);
TradeoffFamily LaplaceFamily();
TradeoffFamily LogisticFamily();
// Uniform on (-1, 1); f_t = f_{0, t/2}.
TradeoffFamily UniformFamily();

// Grid check of f_s o f_t = f_{s+t} and f_0 = identity over
// s, t in {0.25, 0.5, 1, 2} and 101 alphas.
AuditReport CheckDivisibility(const TradeoffFamily& family,
                              double tolerance = 1e-8);

}  // namespace fdp_noise

#endif  // FDP_NOISE_TRADEOFF_H_
