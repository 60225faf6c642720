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

#include "gtest/gtest.h"

namespace fdp_noise {
namespace {

TEST(DiscretePmfTest, RejectsBadInput) {
  EXPECT_FALSE(DiscretePmf::Create(0, {}).ok());
  EXPECT_FALSE(DiscretePmf::Create(0, {0.5, -0.1, 0.6}).ok());
  EXPECT_FALSE(DiscretePmf::Create(0, {0.5, 0.4}).ok());
  EXPECT_FALSE(DiscretePmf::Create(0, {1.0}, -1e-3, 0.0).ok());
  EXPECT_TRUE(DiscretePmf::Create(0, {0.5, 0.5 + 1e-10}).ok());
}

TEST(DiscretePmfTest, CdfConventions) {
  const DiscretePmf p = *DiscretePmf::Create(-1, {0.25, 0.5, 0.25});
  EXPECT_EQ(p.lo(), -1);
  EXPECT_EQ(p.hi(), 1);
  EXPECT_DOUBLE_EQ(p.Cdf(-2), 0.0);
  EXPECT_DOUBLE_EQ(p.Cdf(-1), 0.25);
  EXPECT_DOUBLE_EQ(p.Cdf(0), 0.75);
  EXPECT_DOUBLE_EQ(p.Cdf(1), 1.0);
  EXPECT_DOUBLE_EQ(p.CdfBefore(0), 0.25);
  EXPECT_DOUBLE_EQ(p.CdfAt(-0.5), 0.25);
  EXPECT_DOUBLE_EQ(p.CdfAt(0.0), 0.75);
  EXPECT_DOUBLE_EQ(p.CdfLeftAt(0.0), 0.25);
  EXPECT_DOUBLE_EQ(p.CdfLeftAt(0.5), 0.75);
  EXPECT_DOUBLE_EQ(p.CdfLeftAt(5.0), 1.0);
}

TEST(DiscretePmfTest, TopOfCdfIsExactlyOne) {
  // Three tenths do not sum to 1 in binary; the cdf must still reach it.
  const DiscretePmf p = *DiscretePmf::Create(0, {0.1, 0.1, 0.1, 0.7});
  EXPECT_EQ(p.Cdf(3), 1.0);
  EXPECT_EQ(p.CdfAt(100.0), 1.0);
}

TEST(DiscretePmfTest, TruncatedMassEntersTheCdf) {
  const DiscretePmf p = *DiscretePmf::Create(0, {0.5, 0.5 - 2e-12}, 1e-12,
                                             1e-12);
  EXPECT_DOUBLE_EQ(p.truncated_mass(), 2e-12);
  EXPECT_DOUBLE_EQ(p.Cdf(-1), 1e-12);
  EXPECT_DOUBLE_EQ(p.Cdf(1), 1.0 - 1e-12);
}

TEST(DiscretePmfTest, ShiftReflectAndSymmetry) {
  const DiscretePmf p = *DiscretePmf::Create(-1, {0.5, 0.5});
  EXPECT_FALSE(p.IsSymmetric(1e-12));
  const DiscretePmf shifted = p.Shifted(3);
  EXPECT_EQ(shifted.lo(), 2);
  EXPECT_DOUBLE_EQ(shifted.Mass(3), 0.5);
  const DiscretePmf mirrored = p.Reflected();
  EXPECT_EQ(mirrored.lo(), 0);
  EXPECT_DOUBLE_EQ(mirrored.Mass(1), 0.5);
  EXPECT_TRUE(DiscretePmf::Create(-1, {0.25, 0.5, 0.25})->IsSymmetric(0.0));
  EXPECT_DOUBLE_EQ(DiscretePmf::PointMass(4).Mass(4), 1.0);
}

}  // namespace
}  // namespace fdp_noise
