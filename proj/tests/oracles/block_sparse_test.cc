// Copyright 2026 The Infocon Authors
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

#include "infocon/oracles/block_sparse.h"

#include "gtest/gtest.h"
#include "test_util.h"

namespace infocon {
namespace {

using ::infocon::testing::MeanAccumulator;

TEST(BlockSparseInstanceTest, Validation) {
  Vector v = Vector::Zero(8);
  v.segment(4, 4) << 0.5, -0.5, 0.5, 0.5;
  ASSERT_OK_AND_ASSIGN(BlockSparseInstance g, BlockSparseInstance::Create(v, 4));
  EXPECT_EQ(g.block_index(), 1);
  EXPECT_EQ(g.delta(), 0.5);
  EXPECT_EQ(g.num_blocks(), 2);
  EXPECT_FALSE(BlockSparseInstance::Create(v, 3).ok());
  Vector two_blocks = v;
  two_blocks[0] = 0.5;
  EXPECT_FALSE(BlockSparseInstance::Create(two_blocks, 4).ok());
  Vector uneven = v;
  uneven[4] = 0.25;
  EXPECT_FALSE(BlockSparseInstance::Create(uneven, 4).ok());
  Vector hole = v;
  hole[5] = 0.0;
  EXPECT_FALSE(BlockSparseInstance::Create(hole, 4).ok());
  Vector big = Vector::Zero(4);
  big[0] = 1.5;
  EXPECT_FALSE(BlockSparseInstance::Create(big, 1).ok());
  EXPECT_TRUE(BlockSparseInstance::Create(Vector::Zero(4), 2).ok());
}

TEST(BlockSparseInstanceTest, FromBlockAndRandom) {
  Vector signs(2);
  signs << 1, -1;
  ASSERT_OK_AND_ASSIGN(BlockSparseInstance g,
                       BlockSparseInstance::FromBlock(6, 2, 2, 0.3, signs));
  EXPECT_EQ(g.v()[4], 0.3);
  EXPECT_EQ(g.v()[5], -0.3);
  EXPECT_EQ(g.v().head(4), Vector::Zero(4));
  EXPECT_FALSE(BlockSparseInstance::FromBlock(6, 2, 3, 0.3, signs).ok());
  RngStream rng(1, 1);
  ASSERT_OK_AND_ASSIGN(BlockSparseInstance r,
                       BlockSparseInstance::Random(64, 8, 0.5, rng));
  EXPECT_EQ((r.v().array() != 0.0).count(), 8);
}

TEST(BlockSparseInstanceTest, ZeroMeanSamples) {
  ASSERT_OK_AND_ASSIGN(BlockSparseInstance g,
                       BlockSparseInstance::Create(Vector::Zero(3), 3));
  RngStream rng(2, 2);
  Vector s;
  int plus = 0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) {
    ASSERT_OK(g.Sample(Vector::Zero(3), rng, &s));
    for (int i = 0; i < 3; ++i) ASSERT_EQ(std::abs(s[i]), 2.0);
    plus += s[0] > 0;
  }
  EXPECT_NEAR(static_cast<double>(plus) / n, 0.5, 5 * std::sqrt(0.25 / n));
}

TEST(BlockSparseInstanceTest, DegenerateCoordinate) {
  Vector v(2);
  v << 1.0, 1.0;
  ASSERT_OK_AND_ASSIGN(BlockSparseInstance g, BlockSparseInstance::Create(v, 2));
  RngStream rng(3, 3);
  Vector x(2), s;
  x << 0.25, -0.5;
  for (int k = 0; k < 100; ++k) {
    ASSERT_OK(g.Sample(x, rng, &s));
    EXPECT_EQ(s[0], 2 * (0.25 - 1));
    EXPECT_EQ(s[1], 2 * (-0.5 - 1));
  }
}

TEST(BlockSparseInstanceTest, MeanIsGradient) {
  Vector signs(2);
  signs << -1, 1;
  ASSERT_OK_AND_ASSIGN(BlockSparseInstance g,
                       BlockSparseInstance::FromBlock(4, 2, 0, 0.4, signs));
  Vector x(4);
  x << 0.1, -0.7, 0.3, 0.9;
  ASSERT_OK_AND_ASSIGN(Vector grad, g.Gradient(x));
  RngStream rng(4, 4);
  Vector s;
  std::vector<MeanAccumulator> acc(4);
  for (int k = 0; k < 200000; ++k) {
    ASSERT_OK(g.Sample(x, rng, &s));
    ASSERT_LE(s.norm(), g.bound());
    for (int i = 0; i < 4; ++i) acc[i].Add(s[i]);
  }
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(acc[i].mean(), grad[i], 5 * acc[i].StandardError());
  }
  EXPECT_NEAR(*g.Value(x), (x - g.v()).squaredNorm(), 1e-15);
}

}  // namespace
}  // namespace infocon
