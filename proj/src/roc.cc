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

#include "fdp_noise/roc.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace fdp_noise {
namespace {

constexpr double kTieTolerance = 1e-12;

struct Outcome {
  double p;
  double q;
};

double RetainedMass(const DiscretePmf& pmf) {
  double total = 0.0;
  for (double m : pmf.masses()) total += m;
  return total;
}

// Both ratios are q/p with p > 0; compared by cross-multiplication.
bool SameRatio(const Outcome& a, const Outcome& b) {
  const double lhs = a.q * b.p;
  const double rhs = b.q * a.p;
  return std::fabs(lhs - rhs) <= kTieTolerance * std::max(lhs, rhs);
}

}  // namespace

double RocCurve::operator()(double alpha) const {
  alpha = std::clamp(alpha, 0.0, 1.0);
  auto it = std::lower_bound(
      vertices_.begin(), vertices_.end(), alpha,
      [](const RocVertex& v, double a) { return v.alpha < a; });
  if (it == vertices_.end()) return vertices_.back().beta;
  if (it == vertices_.begin() || it->alpha == alpha) return it->beta;
  const RocVertex& right = *it;
  const RocVertex& left = *(it - 1);
  const double w = (alpha - left.alpha) / (right.alpha - left.alpha);
  return left.beta + w * (right.beta - left.beta);
}

TradeoffFunction RocCurve::AsTradeoff(std::string label,
                                      bool symmetric) const {
  RocCurve copy = *this;
  const bool nontrivial = std::any_of(
      vertices_.begin(), vertices_.end(),
      [](const RocVertex& v) { return v.beta < v.alpha - kTieTolerance; });
  return TradeoffFunction(
      [copy](double alpha) { return copy(alpha); }, symmetric, nontrivial,
      std::nullopt, std::move(label));
}

absl::StatusOr<RocCurve> RocDiscrete(const DiscretePmf& p,
                                     const DiscretePmf& q) {
  const double p_total = RetainedMass(p);
  const double q_total = RetainedMass(q);
  if (!(p_total > 0.0) || !(q_total > 0.0)) {
    return absl::InvalidArgumentError("pmf has no retained mass");
  }

  const int64_t lo = std::min(p.lo(), q.lo());
  const int64_t hi = std::max(p.hi(), q.hi());
  // Outcomes with p = 0 are rejected at no cost; they only lower beta at
  // alpha = 1, which the suffix sums below already reflect.
  std::vector<Outcome> outcomes;
  for (int64_t x = lo; x <= hi; ++x) {
    const double px = p.Mass(x) / p_total;
    const double qx = q.Mass(x) / q_total;
    if (px > 0.0) outcomes.push_back({px, qx});
  }
  // Descending likelihood ratio; ties are resolved by the merge below.
  std::stable_sort(outcomes.begin(), outcomes.end(),
                   [](const Outcome& a, const Outcome& b) {
                     return a.q * b.p > b.q * a.p;
                   });
  std::vector<Outcome> groups;
  for (const Outcome& o : outcomes) {
    if (!groups.empty() && SameRatio(groups.back(), o)) {
      groups.back().p += o.p;
      groups.back().q += o.q;
    } else {
      groups.push_back(o);
    }
  }

  // Vertex k accepts groups k..end, so its coordinates are suffix sums; this
  // keeps small alphas and betas free of cancellation and ends exactly at
  // (0, 0).
  std::vector<RocVertex> vertices(groups.size() + 1);
  vertices.back() = {0.0, 0.0};
  double alpha = 0.0, beta = 0.0;
  for (size_t k = groups.size(); k-- > 0;) {
    alpha += groups[k].p;
    beta += groups[k].q;
    vertices[k] = {alpha, beta};
  }
  vertices.front().alpha = 1.0;
  std::reverse(vertices.begin(), vertices.end());
  return RocCurve(std::move(vertices),
                  std::max(p.truncated_mass(), q.truncated_mass()));
}

absl::StatusOr<RocCurve> ShiftRoc(const DiscretePmf& pmf, int64_t t) {
  return RocDiscrete(pmf, pmf.Shifted(t));
}

DominanceResult Dominates(const RocCurve& curve, const TradeoffFunction& f,
                          double tolerance) {
  DominanceResult result;
  result.worst_margin = std::numeric_limits<double>::infinity();
  for (const RocVertex& v : curve.vertices()) {
    const double fv = f(v.alpha);
    const double margin = v.beta - fv;
    if (margin < result.worst_margin) {
      result.worst_margin = margin;
      result.worst_alpha = v.alpha;
      result.curve_value = v.beta;
      result.f_value = fv;
    }
  }
  result.dominates = result.worst_margin >= -tolerance;
  return result;
}

absl::StatusOr<double> TvDiscrete(const DiscretePmf& p, const DiscretePmf& q) {
  const double p_total = RetainedMass(p);
  const double q_total = RetainedMass(q);
  if (!(p_total > 0.0) || !(q_total > 0.0)) {
    return absl::InvalidArgumentError("pmf has no retained mass");
  }
  const int64_t lo = std::min(p.lo(), q.lo());
  const int64_t hi = std::max(p.hi(), q.hi());
  double sum = 0.0;
  for (int64_t x = lo; x <= hi; ++x) {
    sum += std::fabs(p.Mass(x) / p_total - q.Mass(x) / q_total);
  }
  return 0.5 * sum;
}

}  // namespace fdp_noise
