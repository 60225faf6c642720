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

#include "fdp_noise/rival_noise.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "fdp_noise/normal.h"

namespace fdp_noise {
namespace {

constexpr double kGridEndTolerance = 1e-6;
constexpr int kBracketDoublings = 1100;
constexpr int kBisections = 200;

}  // namespace

RivalNoise RivalNoise::FromCdf(std::function<double(double)> cdf,
                               std::string label) {
  RivalNoise noise(NoiseKind::kContinuousCdf, std::move(label));
  noise.cdf_ =
      std::make_shared<const std::function<double(double)>>(std::move(cdf));
  return noise;
}

absl::StatusOr<RivalNoise> RivalNoise::FromCdfGrid(std::vector<double> x,
                                                   std::vector<double> cdf,
                                                   std::string label) {
  if (x.size() != cdf.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "field \"F\": length ", cdf.size(), " differs from \"x\" length ",
        x.size()));
  }
  if (x.size() < 2) {
    return absl::InvalidArgumentError(
        "field \"x\": a cdf grid needs at least two points");
  }
  for (size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(cdf[i])) {
      return absl::InvalidArgumentError(
          absl::StrCat("cdf grid entry ", i, " is not finite"));
    }
    if (cdf[i] < 0.0 || cdf[i] > 1.0) {
      return absl::InvalidArgumentError(
          absl::StrCat("field \"F\": entry ", i, " = ", cdf[i],
                       " is outside [0, 1]"));
    }
    if (i > 0 && !(x[i] > x[i - 1])) {
      return absl::InvalidArgumentError(
          absl::StrCat("field \"x\": not strictly increasing at entry ", i));
    }
    if (i > 0 && cdf[i] < cdf[i - 1]) {
      return absl::InvalidArgumentError(
          absl::StrCat("field \"F\": decreases at entry ", i));
    }
  }
  if (cdf.front() > kGridEndTolerance || cdf.back() < 1.0 - kGridEndTolerance) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "field \"F\": grid must start near 0 and end near 1 (got %g, %g)",
        cdf.front(), cdf.back()));
  }
  RivalNoise noise(NoiseKind::kContinuousCdf, std::move(label));
  noise.grid_x_ = std::make_shared<const std::vector<double>>(std::move(x));
  noise.grid_f_ = std::make_shared<const std::vector<double>>(std::move(cdf));
  return noise;
}

RivalNoise RivalNoise::FromPmf(DiscretePmf pmf, std::string label) {
  RivalNoise noise(NoiseKind::kDiscretePmf, std::move(label));
  noise.pmf_ = std::move(pmf);
  return noise;
}

absl::StatusOr<RivalNoise> RivalNoise::FromSamples(std::vector<double> samples,
                                                   std::string label) {
  if (samples.empty()) {
    return absl::InvalidArgumentError("sample file contains no values");
  }
  for (size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i])) {
      return absl::InvalidArgumentError(
          absl::StrCat("sample ", i, " is not finite"));
    }
  }
  std::sort(samples.begin(), samples.end());
  RivalNoise noise(NoiseKind::kEmpiricalSamples, std::move(label));
  noise.band_ = std::sqrt(std::log(2.0 / kDkwLevel) /
                          (2.0 * static_cast<double>(samples.size())));
  noise.samples_ =
      std::make_shared<const std::vector<double>>(std::move(samples));
  return noise;
}

RivalNoise RivalNoise::FromCnd(const ContinuousCnd& cnd) {
  return FromCdf([cnd](double x) { return cnd.Cdf(x); }, cnd.label());
}

double RivalNoise::Cdf(double x) const {
  switch (kind_) {
    case NoiseKind::kContinuousCdf: {
      if (cdf_) return (*cdf_)(x);
      const std::vector<double>& gx = *grid_x_;
      const std::vector<double>& gf = *grid_f_;
      if (x < gx.front()) return 0.0;
      if (x >= gx.back()) return 1.0;
      const size_t i =
          std::upper_bound(gx.begin(), gx.end(), x) - gx.begin();  // >= 1
      const double w = (x - gx[i - 1]) / (gx[i] - gx[i - 1]);
      return gf[i - 1] + w * (gf[i] - gf[i - 1]);
    }
    case NoiseKind::kDiscretePmf:
      return pmf_->CdfAt(x);
    case NoiseKind::kEmpiricalSamples: {
      const std::vector<double>& s = *samples_;
      return static_cast<double>(std::upper_bound(s.begin(), s.end(), x) -
                                 s.begin()) /
             static_cast<double>(s.size());
    }
  }
  return 0.0;
}

double RivalNoise::CdfLeft(double x) const {
  switch (kind_) {
    case NoiseKind::kContinuousCdf:
      return Cdf(x);
    case NoiseKind::kDiscretePmf:
      return pmf_->CdfLeftAt(x);
    case NoiseKind::kEmpiricalSamples: {
      const std::vector<double>& s = *samples_;
      return static_cast<double>(std::lower_bound(s.begin(), s.end(), x) -
                                 s.begin()) /
             static_cast<double>(s.size());
    }
  }
  return 0.0;
}

absl::StatusOr<double> RivalNoise::Quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("quantile level must lie in (0, 1), got ", u));
  }
  if (kind_ == NoiseKind::kEmpiricalSamples) {
    const std::vector<double>& s = *samples_;
    const double rank = std::ceil(u * static_cast<double>(s.size()));
    const size_t index = static_cast<size_t>(std::max(rank, 1.0)) - 1;
    return s[std::min(index, s.size() - 1)];
  }
  if (kind_ == NoiseKind::kDiscretePmf) {
    int64_t lo = pmf_->lo() - 1;  // Cdf(lo) < u unless u <= truncated mass
    int64_t hi = pmf_->hi();
    if (pmf_->Cdf(lo) >= u) return static_cast<double>(pmf_->lo());
    while (hi - lo > 1) {
      const int64_t mid = lo + (hi - lo) / 2;
      if (pmf_->Cdf(mid) >= u) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return static_cast<double>(hi);
  }
  double lo = -1.0;
  double hi = 1.0;
  for (int i = 0; i < kBracketDoublings && Cdf(lo) >= u; ++i) lo *= 2.0;
  for (int i = 0; i < kBracketDoublings && Cdf(hi) < u; ++i) hi *= 2.0;
  for (int i = 0; i < kBisections && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (Cdf(mid) >= u) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double RivalNoise::InterquartileRange() const {
  return *Quantile(0.75) - *Quantile(0.25);
}

RivalNoise LaplaceNoise(double scale) {
  return RivalNoise::FromCdf(
      [scale](double x) {
        const double z = x / scale;
        return z < 0.0 ? 0.5 * std::exp(z) : 1.0 - 0.5 * std::exp(-z);
      },
      absl::StrFormat("laplace(b=%g)", scale));
}

RivalNoise GaussianNoise(double sigma) {
  return RivalNoise::FromCdf(
      [sigma](double x) { return StandardNormalCdf(x / sigma); },
      absl::StrFormat("normal(sigma=%g)", sigma));
}

}  // namespace fdp_noise
