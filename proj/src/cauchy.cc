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

#include "fdp_noise/cauchy.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace fdp_noise {
namespace {

constexpr int kThresholdIterations = 100;

// P(lo < X < hi) for X ~ Cauchy(location, 1); infinite endpoints allowed.
double CauchyInterval(double lo, double hi, double location) {
  return (std::atan(hi - location) - std::atan(lo - location)) /
         std::numbers::pi;
}

// Probability of the rejection region {x : LR(x) > r} under Cauchy(location)
// where LR(x) = (1 + x^2) / (1 + (x - m)^2). The region is where
// (1 - r) x^2 + 2 r m x + (1 - r - r m^2) > 0.
double RejectionProbability(double m, double r, double location) {
  const double a = 1.0 - r;
  const double half_b = r * m;
  const double c = 1.0 - r - r * m * m;
  const double disc = r * m * m - a * a;
  if (disc < 0.0) {
    // r beyond the range of LR: nothing (r large) or everything (r small).
    return a < 0.0 ? 0.0 : 1.0;
  }
  // Stable roots: q / a and c / q with q = -(half_b + sqrt(disc)) < 0.
  const double q = -(half_b + std::sqrt(disc));
  const double finite_root = c / q;
  if (a == 0.0) {
    return 0.5 - std::atan(finite_root - location) / std::numbers::pi;
  }
  const double other_root = q / a;
  const double lo = std::min(finite_root, other_root);
  const double hi = std::max(finite_root, other_root);
  const double inner = CauchyInterval(lo, hi, location);
  return a < 0.0 ? inner : 1.0 - inner;
}

}  // namespace

absl::StatusOr<CauchyTradeoff> MakeCauchyTradeoff(double m) {
  if (!(m > 0.0) || std::isinf(m)) {
    return absl::InvalidArgumentError(
        absl::StrCat("Cauchy shift m must be positive and finite, got ", m));
  }
  const double root = std::sqrt(m * m + 4.0);
  const double eps_lower =
      std::log((4.0 + (m + root) * (m + root)) / (4.0 + (m - root) * (m - root)));

  auto eval = [m, eps_lower](double alpha) {
    const double target = 1.0 - alpha;  // type I error
    double lo = -eps_lower;
    double hi = eps_lower;
    for (int i = 0; i < kThresholdIterations; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (RejectionProbability(m, std::exp(mid), 0.0) > target) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const double r = std::exp(0.5 * (lo + hi));
    return 1.0 - RejectionProbability(m, r, m);
  };
  TradeoffFunction curve(eval, /*symmetric=*/true, /*nontrivial=*/true,
                         std::nullopt, absl::StrFormat("C_%g", m));
  const double c = BisectFixedPoint(curve);
  const double c_tv =
      0.5 * (1.0 - (2.0 / std::numbers::pi) * std::atan(m / 2.0));
  return CauchyTradeoff{curve, eps_lower, std::log((1.0 - c) / c), c, c_tv};
}

}  // namespace fdp_noise
