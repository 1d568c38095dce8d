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

#include "infocon/channels/strategy.h"

#include "gtest/gtest.h"
#include "infocon/channels/channel.h"
#include "test_util.h"

namespace infocon {
namespace {

TEST(StrategyTest, NonadaptiveIgnoresHistory) {
  ASSERT_OK_AND_ASSIGN(ChannelSpec w1, ChannelSpec::PointMass(3, 0));
  ASSERT_OK_AND_ASSIGN(ChannelSpec w2, ChannelSpec::PointMass(3, 2));
  ASSERT_OK_AND_ASSIGN(Strategy s,
                       Strategy::Nonadaptive(ChannelFamily::kOblivious, {w1, w2}));
  EXPECT_FALSE(s.adaptive());
  RngStream rng(1, 1);
  MessageHistory history;
  ASSERT_OK_AND_ASSIGN(ChannelSpec got, s.Next(history, 2, rng));
  EXPECT_EQ(got, w2);
  ASSERT_OK_AND_ASSIGN(Message m, ApplyChannel(w1, Vector::Ones(3), rng));
  history.push_back(m);
  ASSERT_OK_AND_ASSIGN(got, s.Next(history, 2, rng));
  EXPECT_EQ(got, w2);
  ASSERT_OK_AND_ASSIGN(got, s.Next(history, 1, rng));
  EXPECT_EQ(got, w1);
  EXPECT_EQ(s.Next(history, 3, rng).status().code(),
            absl::StatusCode::kOutOfRange);
  EXPECT_FALSE(s.Next(history, 0, rng).ok());
}

TEST(StrategyTest, AdaptiveAlwaysUniform) {
  ASSERT_OK_AND_ASSIGN(ChannelSpec uniform, ChannelSpec::UniformOblivious(4));
  ASSERT_OK_AND_ASSIGN(
      Strategy s,
      Strategy::Adaptive(
          ChannelFamily::kOblivious,
          [uniform](const MessageHistory&, int64_t, RngStream&)
              -> absl::StatusOr<ChannelSpec> { return uniform; },
          10));
  EXPECT_TRUE(s.adaptive());
  RngStream rng(1, 1);
  ASSERT_OK_AND_ASSIGN(ChannelSpec got, s.Next({}, 5, rng));
  EXPECT_EQ(got, uniform);
}

TEST(StrategyTest, FamilyViolationRejected) {
  ASSERT_OK_AND_ASSIGN(ChannelSpec ldp, ChannelSpec::Ldp(4, 1.0, 1.0));
  ASSERT_OK_AND_ASSIGN(
      Strategy s,
      Strategy::Adaptive(
          ChannelFamily::kCommunication,
          [ldp](const MessageHistory&, int64_t, RngStream&)
              -> absl::StatusOr<ChannelSpec> { return ldp; },
          10));
  RngStream rng(1, 1);
  EXPECT_EQ(s.Next({}, 1, rng).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_FALSE(Strategy::Nonadaptive(ChannelFamily::kOblivious, {ldp}).ok());
  EXPECT_FALSE(Strategy::Fixed(ChannelFamily::kPrivacy, ldp, 0).ok());
}

TEST(StrategyTest, FixedRepeats) {
  ASSERT_OK_AND_ASSIGN(ChannelSpec ldp, ChannelSpec::Ldp(4, 1.0, 1.0));
  ASSERT_OK_AND_ASSIGN(Strategy s,
                       Strategy::Fixed(ChannelFamily::kPrivacy, ldp, 100));
  RngStream rng(1, 1);
  for (int t : {1, 50, 100}) {
    ASSERT_OK_AND_ASSIGN(ChannelSpec got, s.Next({}, t, rng));
    EXPECT_EQ(got, ldp);
  }
  EXPECT_FALSE(s.Next({}, 101, rng).ok());
}

}  // namespace
}  // namespace infocon
