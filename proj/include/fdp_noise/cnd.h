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

#ifndef FDP_NOISE_CND_H_
#define FDP_NOISE_CND_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "fdp_noise/audit_report.h"
#include "fdp_noise/tradeoff.h"

namespace fdp_noise {

// Recurrence applications allowed per cdf evaluation before the value is
// clamped to 0 or 1.
inline constexpr int64_t kMaxRecurrenceSteps = 100000;

struct CdfValue {
  double value;
  // True when the step cap was hit and `value` was clamped.
  bool clamped = false;
};

// Canonical noise distribution for a symmetric nontrivial tradeoff function,
// held as a cdf evaluator. Immutable and cheap to copy.
class ContinuousCnd {
 public:
  using CdfEvaluator = std::function<CdfValue(double)>;

  ContinuousCnd(TradeoffFunction f, double c_f, CdfEvaluator cdf,
                std::string label);

  const TradeoffFunction& f() const { return f_; }
  double c_f() const { return c_f_; }
  const std::string& label() const { return label_; }

  double Cdf(double x) const { return (*cdf_)(x).value; }
  CdfValue CdfWithFlag(double x) const { return (*cdf_)(x); }

  // inf{x : F(x) >= u} for u in (0, 1).
  absl::StatusOr<double> Quantile(double u) const;

 private:
  TradeoffFunction f_;
  double c_f_;
  std::shared_ptr<const CdfEvaluator> cdf_;
  std::string label_;
};

// Linear on [-1/2, 1/2] from c_f to 1 - c_f, extended by F(x) = f(F(x + 1))
// to the left and by symmetry to the right.
absl::StatusOr<ContinuousCnd> ConstructCnd(const TradeoffFunction& f);

// Inverse-transform draws; draw i uses counter i of the seeded generator.
std::vector<double> SampleCnd(const ContinuousCnd& cnd, uint64_t seed,
                              size_t n);

// P(|N| <= t/2) for integer t >= 0 from the iterates of f.
absl::StatusOr<double> Concentration(const ContinuousCnd& cnd, int t);

// Exponential tail bounds on `t_points` grid points in [0, t_max] and moment
// bounds E|N|^n <= eps^-n e^eps n! for n = 1..n_max.
AuditReport TailAndMomentCheck(const ContinuousCnd& cnd, double t_max,
                               int n_max, int t_points = 1000);

// Numerical E|N|^n = int_0^inf n x^(n-1) P(|N| > x) dx; `truncation` receives
// an upper bound on the neglected tail when non-null.
double AbsoluteMoment(const ContinuousCnd& cnd, int n,
                      double* truncation = nullptr);

// Tulap(0, exp(-eps), 0): discrete Laplace plus Uniform(-1/2, 1/2).
absl::StatusOr<double> TulapReferenceCdf(double eps, double x);
absl::StatusOr<double> TulapVariance(double eps);

// Symmetry, F(0) = 1/2, F(-1/2) = c_f, monotonicity and the recurrence
// residual |F(x) - f(F(x + 1))| on an evenly spaced grid.
AuditReport VerifyContinuousCnd(const ContinuousCnd& cnd, double x_min = -10.0,
                                double x_max = 10.0, int points = 2001,
                                double tolerance = 1e-9);

}  // namespace fdp_noise

#endif  // FDP_NOISE_CND_H_
