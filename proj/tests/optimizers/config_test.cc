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

#include "infocon/optimizers/config.h"

#include "gtest/gtest.h"
#include "test_util.h"

namespace infocon {
namespace {

TEST(StepScheduleTest, Values) {
  EXPECT_EQ(StepSchedule::Constant(0.5)->At(7), 0.5);
  EXPECT_DOUBLE_EQ(StepSchedule::InvSqrt(2.0)->At(4), 1.0);
  EXPECT_DOUBLE_EQ(StepSchedule::StronglyConvex(0.5)->At(3), 1.0);
  EXPECT_FALSE(StepSchedule::Constant(0.0).ok());
  EXPECT_FALSE(StepSchedule::InvSqrt(-1.0).ok());
  EXPECT_FALSE(StepSchedule::StronglyConvex(
                   std::numeric_limits<double>::infinity())
                   .ok());
}

TEST(OptConfigTest, OutputDefaultsFollowSchedule) {
  OptConfig config;
  EXPECT_EQ(config.ResolvedOutput(), OutputMode::kAverage);
  config.schedule = *StepSchedule::StronglyConvex(1.0);
  EXPECT_EQ(config.ResolvedOutput(), OutputMode::kLastIterate);
  config.output = OutputMode::kAverage;
  EXPECT_EQ(config.ResolvedOutput(), OutputMode::kAverage);
}

TEST(ShapeTest, PiStar) {
  EXPECT_OK(ValidatePiStarShape(64, 8, 1 << 14));
  EXPECT_OK(ValidatePiStarShape(64, 64, 1));
  EXPECT_FALSE(ValidatePiStarShape(64, 7, 1 << 14).ok());
  EXPECT_FALSE(ValidatePiStarShape(64, 8, 100).ok());
  EXPECT_FALSE(ValidatePiStarShape(64, 0, 64).ok());
}

TEST(ShapeTest, Acd) {
  EXPECT_OK(ValidateAcdShape(64, 8, 2048));
  EXPECT_OK(ValidateAcdShape(1024, 32, 64 * 1024));
  EXPECT_FALSE(ValidateAcdShape(64, 8, 8).ok());     // T s / (2 d) < 1
  EXPECT_FALSE(ValidateAcdShape(64, 8, 2044).ok());  // T / (2 s) fractional
  EXPECT_FALSE(ValidateAcdShape(64, 6, 2048).ok());  // s does not divide d
}

TEST(ShapeTest, Nonadaptive) {
  EXPECT_OK(ValidateNonadaptiveShape(64, 8, 128));
  EXPECT_FALSE(ValidateNonadaptiveShape(64, 8, 100).ok());
  EXPECT_FALSE(ValidateNonadaptiveShape(64, 5, 128).ok());
}

}  // namespace
}  // namespace infocon
