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

#ifndef FDP_NOISE_RIVAL_NOISE_H_
#define FDP_NOISE_RIVAL_NOISE_H_

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "fdp_noise/cnd.h"
#include "fdp_noise/discrete_pmf.h"

namespace fdp_noise {

// Significance level of the DKW band attached to empirical cdfs.
inline constexpr double kDkwLevel = 1e-3;

enum class NoiseKind { kContinuousCdf, kDiscretePmf, kEmpiricalSamples };

// A noise distribution known through its cdf, its pmf, or a sample.
class RivalNoise {
 public:
  // `cdf` must be continuous, non-decreasing, with limits 0 and 1.
  static RivalNoise FromCdf(std::function<double(double)> cdf,
                            std::string label);
  // Piecewise-linear cdf through the points; 0 left of the grid and 1 right
  // of it, so the end values must be within 1e-6 of 0 and 1.
  static absl::StatusOr<RivalNoise> FromCdfGrid(std::vector<double> x,
                                                std::vector<double> cdf,
                                                std::string label);
  static RivalNoise FromPmf(DiscretePmf pmf, std::string label);
  static absl::StatusOr<RivalNoise> FromSamples(std::vector<double> samples,
                                                std::string label);
  static RivalNoise FromCnd(const ContinuousCnd& cnd);

  NoiseKind kind() const { return kind_; }
  const std::string& label() const { return label_; }

  // P(N <= x).
  double Cdf(double x) const;
  // P(N < x).
  double CdfLeft(double x) const;
  // P(lo < N <= hi).
  double HalfOpenProbability(double lo, double hi) const {
    return std::max(0.0, Cdf(hi) - Cdf(lo));
  }
  // P(|N - a| <= t).
  double ClosedProbability(double a, double t) const {
    return std::max(0.0, Cdf(a + t) - CdfLeft(a - t));
  }

  // Uniform error allowance of Cdf (the DKW half-width for samples, else 0).
  double CdfBand() const { return band_; }
  // Allowance for a probability of an interval, a difference of two cdfs.
  double IntervalBand() const { return 2.0 * band_; }

  // inf{x : F(x) >= u}, u in (0, 1).
  absl::StatusOr<double> Quantile(double u) const;
  double InterquartileRange() const;

  const DiscretePmf* pmf() const { return pmf_ ? &*pmf_ : nullptr; }
  // Sorted sample, or null.
  const std::vector<double>* samples() const {
    return samples_ ? samples_.get() : nullptr;
  }
  // Grid points of a cdf-grid rival, or null.
  const std::vector<double>* grid_x() const {
    return grid_x_ ? grid_x_.get() : nullptr;
  }

 private:
  RivalNoise(NoiseKind kind, std::string label) : kind_(kind),
                                                  label_(std::move(label)) {}

  NoiseKind kind_;
  std::string label_;
  double band_ = 0.0;
  std::shared_ptr<const std::function<double(double)>> cdf_;
  std::shared_ptr<const std::vector<double>> grid_x_;
  std::shared_ptr<const std::vector<double>> grid_f_;
  std::optional<DiscretePmf> pmf_;
  std::shared_ptr<const std::vector<double>> samples_;
};

// Closed-form continuous rivals.
RivalNoise LaplaceNoise(double scale);
RivalNoise GaussianNoise(double sigma);

}  // namespace fdp_noise

#endif  // FDP_NOISE_RIVAL_NOISE_H_
