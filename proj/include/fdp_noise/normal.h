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

#ifndef FDP_NOISE_NORMAL_H_
#define FDP_NOISE_NORMAL_H_

namespace fdp_noise {

// Standard normal cdf, computed from erfc so that the lower tail keeps full
// relative precision.
double StandardNormalCdf(double x);

// Inverse of StandardNormalCdf on [0, 1]. Returns -inf at 0 and +inf at 1.
// Uses the Wichura rational approximation followed by safeguarded Newton
// steps; for p > 1/2 the result is -StandardNormalQuantile(1 - p), which is
// exact in the subtraction.
double StandardNormalQuantile(double p);

}  // namespace fdp_noise

#endif  // FDP_NOISE_NORMAL_H_
