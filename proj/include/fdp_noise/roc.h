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

#ifndef FDP_NOISE_ROC_H_
#define FDP_NOISE_ROC_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "fdp_noise/discrete_pmf.h"
#include "fdp_noise/tradeoff.h"

namespace fdp_noise {

struct RocVertex {
  double alpha;  // specificity
  double beta;   // type II error
};

// Exact tradeoff curve T(P, Q) of two finitely supported distributions. The
// curve is the piecewise-linear interpolation of its vertices, which run from
// (0, 0) to (1, T(P, Q)(1)); the linear pieces are the randomized tests.
class RocCurve {
 public:
  RocCurve(std::vector<RocVertex> vertices, double truncated_mass)
      : vertices_(std::move(vertices)), truncated_mass_(truncated_mass) {}

  const std::vector<RocVertex>& vertices() const { return vertices_; }
  // Input mass that had been cut from infinite tails before the curve was
  // built; the curve treats the retained mass as renormalized to 1.
  double truncated_mass() const { return truncated_mass_; }

  double operator()(double alpha) const;

  TradeoffFunction AsTradeoff(std::string label, bool symmetric = true) const;

 private:
  std::vector<RocVertex> vertices_;
  double truncated_mass_;
};

// Neyman-Pearson curve: outcomes sorted by likelihood ratio q/p (outcomes with
// p = 0 first), tied ratios merged into a single segment.
absl::StatusOr<RocCurve> RocDiscrete(const DiscretePmf& p,
                                     const DiscretePmf& q);

// Shorthand for the sensitivity-t curve T(N, N + t).
absl::StatusOr<RocCurve> ShiftRoc(const DiscretePmf& pmf, int64_t t);

struct DominanceResult {
  bool dominates = true;
  // min over vertices of curve(alpha) - f(alpha).
  double worst_margin = 0.0;
  double worst_alpha = 0.0;
  double curve_value = 0.0;
  double f_value = 0.0;
};

// curve >= f - tolerance everywhere. Checking the vertices suffices because
// the curve is linear between them and f is convex.
DominanceResult Dominates(const RocCurve& curve, const TradeoffFunction& f,
                          double tolerance);

// (1/2) sum |p(x) - q(x)| over the union of supports.
absl::StatusOr<double> TvDiscrete(const DiscretePmf& p, const DiscretePmf& q);

}  // namespace fdp_noise

#endif  // FDP_NOISE_ROC_H_
