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

#include "fdp_noise/discrete_pmf.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace fdp_noise {

DiscretePmf::DiscretePmf(int64_t lo, std::vector<double> mass, double below,
                         double above)
    : lo_(lo),
      mass_(std::move(mass)),
      truncated_below_(below),
      truncated_above_(above) {
  cumulative_.resize(mass_.size());
  double running = truncated_below_;
  for (size_t i = 0; i < mass_.size(); ++i) {
    running += mass_[i];
    cumulative_[i] = running;
  }
  // Past the median the cdf is 1 minus the mass above, which keeps the upper
  // tail as accurate as the lower one and makes it exactly 1 at the top.
  split_ = mass_.size();
  for (size_t i = 0; i < mass_.size(); ++i) {
    if (cumulative_[i] >= 0.5) {
      split_ = i;
      break;
    }
  }
  double mass_above = truncated_above_;
  for (size_t i = mass_.size(); i-- > split_;) {
    cumulative_[i] = 1.0 - mass_above;
    mass_above += mass_[i];
  }
}

absl::StatusOr<DiscretePmf> DiscretePmf::Create(int64_t lo,
                                                std::vector<double> mass,
                                                double truncated_below,
                                                double truncated_above) {
  if (mass.empty()) {
    return absl::InvalidArgumentError("pmf must have at least one mass point");
  }
  if (!(truncated_below >= 0.0) || !(truncated_above >= 0.0)) {
    return absl::InvalidArgumentError("truncated mass must be nonnegative");
  }
  double total = truncated_below + truncated_above;
  for (size_t i = 0; i < mass.size(); ++i) {
    if (!std::isfinite(mass[i]) || mass[i] < 0.0) {
      return absl::InvalidArgumentError(
          absl::StrCat("negative or non-finite mass ", mass[i], " at x=",
                       lo + static_cast<int64_t>(i)));
    }
    total += mass[i];
  }
  if (std::fabs(total - 1.0) > kPmfMassTolerance) {
    return absl::InvalidArgumentError(absl::StrCat(
        "pmf total mass ", total, " deviates from 1 by more than ",
        kPmfMassTolerance));
  }
  return DiscretePmf(lo, std::move(mass), truncated_below, truncated_above);
}

DiscretePmf DiscretePmf::PointMass(int64_t x) {
  return DiscretePmf(x, {1.0}, 0.0, 0.0);
}

double DiscretePmf::Mass(int64_t x) const {
  if (x < lo_ || x > hi()) return 0.0;
  return mass_[static_cast<size_t>(x - lo_)];
}

double DiscretePmf::Cdf(int64_t x) const {
  if (x < lo_) return truncated_below_;
  if (x >= hi()) return 1.0 - truncated_above_;
  return cumulative_[static_cast<size_t>(x - lo_)];
}

double DiscretePmf::CdfAt(double x) const {
  if (std::isnan(x)) return x;
  if (x < static_cast<double>(lo_)) return truncated_below_;
  if (x >= static_cast<double>(hi())) return 1.0 - truncated_above_;
  return Cdf(static_cast<int64_t>(std::floor(x)));
}

double DiscretePmf::CdfLeftAt(double x) const {
  if (std::isnan(x)) return x;
  if (x <= static_cast<double>(lo_)) return truncated_below_;
  if (x > static_cast<double>(hi())) return 1.0 - truncated_above_;
  return Cdf(static_cast<int64_t>(std::ceil(x)) - 1);
}

DiscretePmf DiscretePmf::Shifted(int64_t k) const {
  return DiscretePmf(lo_ + k, mass_, truncated_below_, truncated_above_);
}

DiscretePmf DiscretePmf::Reflected() const {
  std::vector<double> mirrored(mass_.rbegin(), mass_.rend());
  return DiscretePmf(-hi(), std::move(mirrored), truncated_above_,
                     truncated_below_);
}

bool DiscretePmf::IsSymmetric(double tolerance) const {
  const int64_t extent = std::max(std::abs(lo_), std::abs(hi()));
  for (int64_t x = 0; x <= extent; ++x) {
    if (std::fabs(Mass(x) - Mass(-x)) > tolerance) return false;
  }
  return std::fabs(truncated_below_ - truncated_above_) <= tolerance;
}

}  // namespace fdp_noise
