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

#include "infocon/core/rng.h"

#include <algorithm>
#include <set>

#include "gtest/gtest.h"
#include "test_util.h"

namespace infocon {
namespace {

// Known-answer vectors for Philox4x32-10.
TEST(PhiloxTest, KnownAnswers) {
  EXPECT_EQ(Philox4x32({0, 0, 0, 0}, {0, 0}),
            (std::array<uint32_t, 4>{0x6627e8d5, 0xe169c58d, 0xbc57ac4c,
                                     0x9b00dbd8}));
  EXPECT_EQ(Philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                       {0xffffffff, 0xffffffff}),
            (std::array<uint32_t, 4>{0x408f276d, 0x41c83b0e, 0xa20bc7c6,
                                     0x6d5451fd}));
  EXPECT_EQ(Philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                       {0xa4093822, 0x299f31d0}),
            (std::array<uint32_t, 4>{0xd16cfe09, 0x94fdcceb, 0x5001e420,
                                     0x24126ea1}));
}

TEST(RngStreamTest, SameAddressSameSequence) {
  RngStream a(42, 7), b(42, 7);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.Next(), b.Next());
  RngStream c = a;
  EXPECT_EQ(c.Uniform(), a.Uniform());
}

TEST(RngStreamTest, DistinctAddressesDiffer) {
  RngStream a(42, 7), b(42, 8), c(43, 7);
  int same_ab = 0, same_ac = 0;
  for (int i = 0; i < 1000; ++i) {
    const uint64_t x = a.Next();
    same_ab += x == b.Next();
    same_ac += x == c.Next();
  }
  EXPECT_EQ(same_ab, 0);
  EXPECT_EQ(same_ac, 0);
}

TEST(RngStreamTest, SubstreamsAreDistinct) {
  RngStream root(1, 0);
  std::set<uint64_t> ids;
  for (uint64_t i = 0; i < 64; ++i) {
    for (uint64_t j = 0; j < 64; ++j) ids.insert(root.Substream(i, j).stream_id());
  }
  EXPECT_EQ(ids.size(), 64u * 64u);
  EXPECT_EQ(root.Substream(3).stream_id(), root.Substream(3).stream_id());
}

TEST(RngStreamTest, SubstreamsUncorrelated) {
  RngStream root(9, 0);
  RngStream a = root.Substream(0), b = root.Substream(1);
  const int n = 200000;
  double sab = 0, sa = 0, sb = 0;
  for (int i = 0; i < n; ++i) {
    const double x = a.Uniform() - 0.5, y = b.Uniform() - 0.5;
    sab += x * y;
    sa += x;
    sb += y;
  }
  // Correlation of independent uniforms has sd 1/sqrt(n).
  EXPECT_LT(std::abs(sab / n * 12.0), 5.0 / std::sqrt(n));
  EXPECT_LT(std::abs(sa / n), 5.0 * std::sqrt(1.0 / 12.0 / n));
}

TEST(RngStreamTest, UniformIntIsUniform) {
  RngStream r(3, 3);
  const int n = 7, draws = 700000;
  std::vector<int> counts(n, 0);
  for (int i = 0; i < draws; ++i) ++counts[r.UniformInt(n)];
  const double p = 1.0 / n, se = std::sqrt(p * (1 - p) / draws);
  for (int c : counts) EXPECT_NEAR(static_cast<double>(c) / draws, p, 5 * se);
  EXPECT_EQ(r.UniformInt(1), 0u);
}

TEST(RngStreamTest, PermutationIsPermutationAndUniform) {
  RngStream r(5, 1);
  const int draws = 60000;
  std::vector<int> first(4, 0);
  for (int i = 0; i < draws; ++i) {
    std::vector<int> p = r.Permutation(4);
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    ASSERT_EQ(sorted, (std::vector<int>{0, 1, 2, 3}));
    ++first[p[0]];
  }
  const double se = std::sqrt(0.25 * 0.75 / draws);
  for (int c : first) EXPECT_NEAR(static_cast<double>(c) / draws, 0.25, 5 * se);
}

TEST(RngStreamTest, BernoulliEdges) {
  RngStream r(1, 1);
  EXPECT_TRUE(r.Bernoulli(1.0));
  EXPECT_FALSE(r.Bernoulli(0.0));
  const uint64_t before = RngStream(1, 1).Next();
  RngStream s(1, 1);
  s.Bernoulli(1.0);
  EXPECT_EQ(s.Next(), before);
}

}  // namespace
}  // namespace infocon
