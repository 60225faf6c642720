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

#ifndef FDP_NOISE_AUDIT_H_
#define FDP_NOISE_AUDIT_H_

#include <vector>

#include "absl/status/statusor.h"
#include "fdp_noise/audit_report.h"
#include "fdp_noise/cnd.h"
#include "fdp_noise/rival_noise.h"
#include "fdp_noise/tradeoff.h"

namespace fdp_noise {

// Additive noise together with the sensitivity it is declared for.
struct NoiseSpec {
  RivalNoise noise;
  int sensitivity = 1;
};

struct CenterMass {
  double sup;
  double argmax_a;
};

// max_a P(-t/2 < N - a <= t/2). With an empty `a_grid` the supremum is exact
// for pmf, sample and cdf-grid noise (the window probability only changes at
// finitely many a) and uses 2001 points over the central 99.9999% for other
// continuous noise.
absl::StatusOr<CenterMass> CenterMassSup(const NoiseSpec& spec, double t,
                                         const std::vector<double>& a_grid);

// 1 - 2 f^k(c_f) for t = 2k + 1 and 1 - 2 f^k(1/2) for t = 2k.
absl::StatusOr<double> AntiBound(const TradeoffFunction& f, int t);

// Compares the largest window mass of every integer length t <= t_max with
// AntiBound(f, t). Windows are scaled by the declared sensitivity.
AuditReport AuditNoise(const NoiseSpec& spec, const TradeoffFunction& f,
                       int t_max, const std::vector<double>& a_grid = {});

// sup_a P(-t < N' - a <= t) / P(|N| <= t + 1/2) <= 1 on the t grid.
AuditReport RatioCheck(const ContinuousCnd& cnd, const NoiseSpec& rival,
                       const std::vector<double>& t_grid,
                       const std::vector<double>& a_grid = {});

// TV(N, N + t). Continuous noise uses bins of width 1/1024 with an edge at
// t/2; pmf noise is exact. Samples are rejected.
absl::StatusOr<double> TotalVariationShift(const RivalNoise& noise, double t);

}  // namespace fdp_noise

#endif  // FDP_NOISE_AUDIT_H_
