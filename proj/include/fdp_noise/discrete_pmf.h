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

#ifndef FDP_NOISE_DISCRETE_PMF_H_
#define FDP_NOISE_DISCRETE_PMF_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"

namespace fdp_noise {

// Tolerance on |sum(mass) + truncated - 1| accepted by DiscretePmf::Create.
inline constexpr double kPmfMassTolerance = 1e-9;

// Probability mass function on the contiguous integer range [lo, hi].
// Mass that was cut from an infinite tail is kept separately for each side so
// that the cdf stays exact: Cdf(x) includes the truncated lower tail.
class DiscretePmf {
 public:
  static absl::StatusOr<DiscretePmf> Create(int64_t lo,
                                            std::vector<double> mass,
                                            double truncated_below = 0.0,
                                            double truncated_above = 0.0);
  static DiscretePmf PointMass(int64_t x);

  int64_t lo() const { return lo_; }
  int64_t hi() const { return lo_ + static_cast<int64_t>(mass_.size()) - 1; }
  size_t size() const { return mass_.size(); }
  const std::vector<double>& masses() const { return mass_; }

  double truncated_below() const { return truncated_below_; }
  double truncated_above() const { return truncated_above_; }
  double truncated_mass() const { return truncated_below_ + truncated_above_; }

  double Mass(int64_t x) const;
  // P(N <= x).
  double Cdf(int64_t x) const;
  // P(N < x).
  double CdfBefore(int64_t x) const { return Cdf(x - 1); }
  // Right-continuous cdf at a real point, P(N <= x).
  double CdfAt(double x) const;
  // Left limit at a real point, P(N < x).
  double CdfLeftAt(double x) const;

  // Distribution of N + k.
  DiscretePmf Shifted(int64_t k) const;
  // Mirror image -N.
  DiscretePmf Reflected() const;
  // mass(x) == mass(-x) within `tolerance` everywhere.
  bool IsSymmetric(double tolerance) const;

 private:
  DiscretePmf(int64_t lo, std::vector<double> mass, double below,
              double above);

  int64_t lo_;
  std::vector<double> mass_;
  // P(N <= lo + i); below index split_ a prefix sum, from it on 1 minus a
  // suffix sum.
  std::vector<double> cumulative_;
  size_t split_ = 0;
  double truncated_below_;
  double truncated_above_;
};

}  // namespace fdp_noise

#endif  // FDP_NOISE_DISCRETE_PMF_H_
