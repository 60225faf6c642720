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

#ifndef FDP_NOISE_CAUCHY_H_
#define FDP_NOISE_CAUCHY_H_

#include "absl/status/statusor.h"
#include "fdp_noise/tradeoff.h"

namespace fdp_noise {

struct CauchyTradeoff {
  // C_m = T(Cauchy(0, 1), Cauchy(m, 1)).
  TradeoffFunction curve;
  // log of the largest likelihood ratio; C_m >= f_{eps_lower, 0}.
  double eps_lower;
  // log((1 - c) / c) with c the numerically solved fixed point of `curve`;
  // C_m <= f_{eps_upper, 0}.
  double eps_upper;
  double fixed_point;
  // (1 - (2/pi) arctan(m/2)) / 2, the fixed point implied by the closed-form
  // total variation between the two Cauchy laws.
  double fixed_point_from_tv;
};

// The likelihood ratio (1 + x^2) / (1 + (x - m)^2) exceeds a threshold r on
// the set where a quadratic is positive; its roots give the type I and II
// errors in closed form through the Cauchy cdf. The curve is evaluated by
// solving for the threshold whose type I error matches 1 - alpha.
absl::StatusOr<CauchyTradeoff> MakeCauchyTradeoff(double m);

}  // namespace fdp_noise

#endif  // FDP_NOISE_CAUCHY_H_
