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

#ifndef FDP_NOISE_LOGCONCAVE_H_
#define FDP_NOISE_LOGCONCAVE_H_

#include <functional>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "fdp_noise/audit_report.h"
#include "fdp_noise/cnd.h"
#include "fdp_noise/rival_noise.h"
#include "fdp_noise/tradeoff.h"

namespace fdp_noise {

// F(-t) = f_t(1/2) for t > 0, F(0) = 1/2, F(t) = 1 - f_t(1/2); the result is
// a CND for f_1. Fails when the family is not closed under composition.
absl::StatusOr<ContinuousCnd> ConstructLogConcaveCnd(
    const TradeoffFamily& family);

// c_{f_t} = f_{t/2}(1/2).
absl::StatusOr<double> FamilyFixedPoint(const TradeoffFamily& family,
                                        double t);

// t -> family.member(scale * t), so member(1) of the result is f_scale.
TradeoffFamily RescaleFamily(const TradeoffFamily& family, double scale);

// Midpoint concavity of log F over consecutive triples of an even grid.
AuditReport LogConcavityCheck(const std::function<double(double)>& cdf,
                              double x_min = -8.0, double x_max = 8.0,
                              int points = 801, double tolerance = 1e-9);

struct DominanceGrids {
  std::vector<double> a;
  std::vector<double> t;
};

// a in {-2, -1, -0.5, 0, 0.5, 1, 2} times the rival's IQR; 201 values of t
// from 0 to the rival's 1 - 1e-6 quantile (in absolute value).
DominanceGrids DefaultDominanceGrids(const RivalNoise& rival);

// E phi(|N - a|). Continuous cdfs are integrated over their 1e-12 to
// 1 - 1e-12 quantile range; the neglected mass goes to `truncated`.
double ExpectedPhiOfDistance(const RivalNoise& noise, double a,
                             const std::function<double(double)>& phi,
                             double* truncated = nullptr);

// P(|N| <= t) >= P(|N' - a| <= t) on the grids and, with `phi`, E phi(|N|)
// <= E phi(|N' - a|). Empty grids select the defaults.
AuditReport DominanceAudit(
    const ContinuousCnd& cnd, const RivalNoise& rival,
    std::vector<double> a_grid, std::vector<double> t_grid,
    const std::optional<std::function<double(double)>>& phi = std::nullopt);

}  // namespace fdp_noise

#endif  // FDP_NOISE_LOGCONCAVE_H_
