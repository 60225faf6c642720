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

#ifndef FDP_NOISE_DISCRETE_H_
#define FDP_NOISE_DISCRETE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "fdp_noise/audit_report.h"
#include "fdp_noise/cnd.h"
#include "fdp_noise/discrete_pmf.h"
#include "fdp_noise/tradeoff.h"

namespace fdp_noise {

// Tails below this mass are cut from infinite supports and recorded in the
// pmf's truncated mass.
inline constexpr double kTailCut = 1e-15;

// Integer noise meant to be a canonical noise distribution for f at
// sensitivity delta. Nothing is checked on construction; see
// VerifyDiscreteCnd.
struct DiscreteCnd {
  DiscretePmf pmf;
  TradeoffFunction f;
  int delta = 1;
};

// N = round(delta * N_c) with round(y) = floor(y + 1/2):
// P(N = x) = F_c((x + 1/2) / delta) - F_c((x - 1/2) / delta).
absl::StatusOr<DiscreteCnd> RoundCnd(const ContinuousCnd& cnd, int delta);

// P(N = x) = f^|x|(1 - c_f) - f^|x|(c_f), the sensitivity-1 CND.
absl::StatusOr<DiscreteCnd> UniqueSens1(const TradeoffFunction& f);

// 1 + 2 sum_{k=1}^{terms} q^(k^2).
double JacobiTheta3AtZero(double q, int64_t terms);

absl::StatusOr<DiscretePmf> DiscreteLaplace(double eps);
absl::StatusOr<DiscretePmf> RoundedGaussian(double sigma);
absl::StatusOr<DiscretePmf> DiscreteGaussian(double sigma);
// "discrete-laplace" (scale = eps), "rounded-gaussian" or
// "discrete-gaussian" (scale = sigma).
absl::StatusOr<DiscretePmf> NamedDistribution(std::string_view name,
                                              double scale);

struct ClosedInterval {
  double lo;
  double hi;
};

// Values of F(0) for which the delta = 2 construction below is f_{eps,0}-DP.
ClosedInterval Sens2PureDpInterval(double eps);

// Delta = 2 pure-DP noise with F(0) = F0 and F(-1) = 1 - F0; the rest follows
// from F(t) = f(F(t + 2)). Rejects F0 outside Sens2PureDpInterval.
absl::StatusOr<DiscreteCnd> Sens2PureDp(double eps, double f0);
// Same construction for any F0 in [1/2, 1] that yields nonnegative masses,
// without the interval check.
absl::StatusOr<DiscreteCnd> Sens2Candidate(double eps, double f0);

// Exact ROC dominance for shifts 1..delta, the recurrence
// f(F(t + delta)) = F(t), and symmetry of the pmf.
AuditReport VerifyDiscreteCnd(const DiscreteCnd& candidate,
                              double tolerance = 1e-9);

// P(|N'- a| <= t) <= 1 - 2 f^t(c_f) for integers a in [a_lo, a_hi] and
// t = 0..t_max, and optionally E phi(|N' - a|) >= E phi(|N|). Requires
// delta = 1. The rival's f-DP is re-checked through its exact ROC curve.
AuditReport DominanceAuditDiscrete(
    const DiscreteCnd& dcnd, const DiscretePmf& rival, int64_t a_lo,
    int64_t a_hi, int t_max,
    const std::optional<std::function<double(double)>>& phi = std::nullopt);

// sum x^k P(N = x); exactly 0 for odd k when the pmf is exactly symmetric.
absl::StatusOr<double> Moment(const DiscretePmf& pmf, int k);

// Inverse-cdf draws over the stored support.
std::vector<int64_t> SampleDiscrete(const DiscreteCnd& dcnd, uint64_t seed,
                                    size_t n);

}  // namespace fdp_noise

#endif  // FDP_NOISE_DISCRETE_H_
