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

#include "fdp_noise/normal.h"

#include <cmath>
#include <limits>

#include <boost/math/distributions/normal.hpp>

#include "gtest/gtest.h"

namespace fdp_noise {
namespace {

const boost::math::normal kStandard(0.0, 1.0);

TEST(StandardNormalCdfTest, MatchesBoostAcrossRangeIncludingTails) {
  for (double x = -37.0; x <= 8.0; x += 0.0625) {
    const double expected = boost::math::cdf(kStandard, x);
    EXPECT_NEAR(StandardNormalCdf(x), expected, 1e-12 * expected + 1e-300)
        << "x=" << x;
  }
}

TEST(StandardNormalCdfTest, SpecialValues) {
  EXPECT_EQ(StandardNormalCdf(0.0), 0.5);
  EXPECT_EQ(StandardNormalCdf(-std::numeric_limits<double>::infinity()), 0.0);
  EXPECT_EQ(StandardNormalCdf(std::numeric_limits<double>::infinity()), 1.0);
  EXPECT_NEAR(StandardNormalCdf(-0.5), 0.30853753872598688, 1e-15);
}

TEST(StandardNormalQuantileTest, MatchesBoost) {
  for (double p : {1e-300, 1e-100, 1e-20, 1e-8, 0.001, 0.02425, 0.1, 0.3,
                   0.5, 0.7, 0.9, 0.97575, 0.999, 1.0 - 1e-10}) {
    const double expected = boost::math::quantile(kStandard, p);
    EXPECT_NEAR(StandardNormalQuantile(p), expected,
                1e-12 * std::fabs(expected) + 1e-15)
        << "p=" << p;
  }
}

TEST(StandardNormalQuantileTest, EndpointsAndCentre) {
  EXPECT_EQ(StandardNormalQuantile(0.0),
            -std::numeric_limits<double>::infinity());
  EXPECT_EQ(StandardNormalQuantile(1.0),
            std::numeric_limits<double>::infinity());
  EXPECT_EQ(StandardNormalQuantile(0.5), 0.0);
}

TEST(StandardNormalQuantileTest, RoundTripsThroughCdf) {
  for (int i = 1; i < 1000; ++i) {
    const double p = i / 1000.0;
    EXPECT_NEAR(StandardNormalCdf(StandardNormalQuantile(p)), p, 1e-15);
  }
}

}  // namespace
}  // namespace fdp_noise
