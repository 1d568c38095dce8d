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

#include "infocon/optimizers/sgd.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "infocon/oracles/hard_instances.h"
#include "infocon/oracles/quadratic.h"
#include "test_util.h"

namespace infocon {
namespace {

using ::infocon::testing::MeanAccumulator;

Strategy IdentityStrategy(int d, int64_t horizon) {
  return *Strategy::Fixed(ChannelFamily::kUnconstrained,
                          *ChannelSpec::Identity(d), horizon);
}

QuadraticOracle Quadratic(double noise) {
  Vector c(3);
  c << 0.5, -0.3, 0.2;
  return *QuadraticOracle::Create(c, *Domain::L2Ball(3, 10.0), noise);
}

TEST(SgdRunTest, ExactQuadraticConverges) {
  QuadraticOracle oracle = Quadratic(0.0);
  OptConfig config;
  config.horizon = 100;
  config.schedule = *StepSchedule::Constant(0.25);
  config.output = OutputMode::kLastIterate;
  RngStream rng(1, 0);
  ASSERT_OK_AND_ASSIGN(RunResult r, SgdRun(oracle, IdentityStrategy(3, 100),
                                           config, rng));
  ASSERT_OK_AND_ASSIGN(double gap, oracle.Gap(r.output));
  EXPECT_LT(gap, 1e-6);
  EXPECT_EQ(r.queries_used, 100);
  EXPECT_EQ(r.total_bits, 100 * 64 * 3);
}

TEST(SgdRunTest, SingleStepIsProjectedGradientStep) {
  Vector c(2);
  c << 3.0, 4.0;
  ASSERT_OK_AND_ASSIGN(QuadraticOracle oracle,
                       QuadraticOracle::Create(c, *Domain::L2Ball(2, 1.0), 0));
  OptConfig config;
  config.horizon = 1;
  config.schedule = *StepSchedule::Constant(0.5);
  RngStream rng(1, 0);
  ASSERT_OK_AND_ASSIGN(RunResult r,
                       SgdRun(oracle, IdentityStrategy(2, 1), config, rng));
  // -eta * 2 (0 - c) = c, projected to the unit sphere.
  EXPECT_NEAR(r.output(0), 0.6, 1e-12);
  EXPECT_NEAR(r.output(1), 0.8, 1e-12);
}

TEST(SgdRunTest, StronglyConvexScheduleReturnsLastIterate) {
  QuadraticOracle oracle = Quadratic(0.0);
  OptConfig config;
  config.horizon = 3;
  config.schedule = *StepSchedule::StronglyConvex(2.0);
  std::vector<Vector> seen;
  config.observer = [&](int64_t, const Vector& x) { seen.push_back(x); };
  RngStream rng(1, 0);
  ASSERT_OK_AND_ASSIGN(RunResult r,
                       SgdRun(oracle, IdentityStrategy(3, 3), config, rng));
  ASSERT_EQ(seen.size(), 3u);
  EXPECT_EQ(r.output, seen.back());
}

TEST(SgdRunTest, ConvexHardInstanceMeetsClassicalRate) {
  // Averaged SGD with eta_t = D / (B sqrt(t)) on an l2 box of diameter D.
  const int d = 16;
  const int64_t horizon = 4096;
  const double bound = 1.0, diameter = 2.0;
  MeanAccumulator gap;
  for (int trial = 0; trial < 100; ++trial) {
    RngStream rng(7, trial);
    ASSERT_OK_AND_ASSIGN(
        ConvexHardInstance inst,
        ConvexHardInstance::Create(RandomSignVector(d, rng), 0.2, bound,
                                   diameter, 2.0, ConvexRegime::kP12));
    OptConfig config;
    config.horizon = horizon;
    config.schedule = *StepSchedule::InvSqrt(diameter / bound);
    ASSERT_OK_AND_ASSIGN(RunResult r, SgdRun(inst, IdentityStrategy(d, horizon),
                                             config, rng));
    ASSERT_OK_AND_ASSIGN(double g, inst.Gap(r.output));
    gap.Add(g);
  }
  EXPECT_LE(gap.mean(), 3.0 * diameter * bound / std::sqrt(horizon));
}

TEST(SgdRunTest, IteratesStayFeasible) {
  RngStream rng(3, 0);
  ASSERT_OK_AND_ASSIGN(
      ConvexHardInstance inst,
      ConvexHardInstance::Create(RandomSignVector(8, rng), 0.3, 1.0, 1.0, 2.0,
                                 ConvexRegime::kP12));
  OptConfig config;
  config.horizon = 500;
  config.schedule = *StepSchedule::Constant(10.0);
  int64_t outside = 0;
  config.observer = [&](int64_t, const Vector& x) {
    if (!inst.domain().Contains(x)) ++outside;
  };
  ASSERT_OK(SgdRun(inst, IdentityStrategy(8, 500), config, rng).status());
  EXPECT_EQ(outside, 0);
}

TEST(SgdRunTest, SameSeedSameResult) {
  QuadraticOracle oracle = Quadratic(1.0);
  OptConfig config;
  config.horizon = 200;
  config.schedule = *StepSchedule::InvSqrt(0.1);
  config.error = [&](const Vector& x) { return *oracle.Gap(x); };
  config.trace_every = 50;
  config.domain = *Domain::Box(3, 1.0);
  Strategy ldp = *Strategy::Fixed(ChannelFamily::kPrivacy,
                                  *ChannelSpec::Ldp(3, 1.0, 5.0), 200);
  RngStream a(5, 9), b(5, 9);
  ASSERT_OK_AND_ASSIGN(RunResult ra, SgdRun(oracle, ldp, config, a));
  ASSERT_OK_AND_ASSIGN(RunResult rb, SgdRun(oracle, ldp, config, b));
  EXPECT_EQ(ra.output, rb.output);
  ASSERT_EQ(ra.trace.size(), 4u);
  for (size_t k = 0; k < ra.trace.size(); ++k) {
    EXPECT_EQ(ra.trace[k].t, rb.trace[k].t);
    EXPECT_EQ(ra.trace[k].error, rb.trace[k].error);
  }
  EXPECT_EQ(ra.total_bits, 200 * (IndexBits(3) + 1));
}

TEST(SgdRunTest, AdaptiveRuleSeesEveryEarlierMessage) {
  QuadraticOracle oracle = Quadratic(0.5);
  int64_t mismatches = 0;
  AdaptiveRule rule = [&](const MessageHistory& h, int64_t t,
                          RngStream&) -> absl::StatusOr<ChannelSpec> {
    if (static_cast<int64_t>(h.size()) != t - 1) ++mismatches;
    return ChannelSpec::PointMass(3, static_cast<int>((t - 1) % 3));
  };
  ASSERT_OK_AND_ASSIGN(Strategy s, Strategy::Adaptive(ChannelFamily::kOblivious,
                                                      rule, 30));
  OptConfig config;
  config.horizon = 30;
  config.schedule = *StepSchedule::Constant(0.05);
  RngStream rng(2, 0);
  ASSERT_OK(SgdRun(oracle, s, config, rng).status());
  EXPECT_EQ(mismatches, 0);
}

TEST(SgdRunTest, UndecodableMessageAborts) {
  QuadraticOracle oracle = Quadratic(0.0);
  Strategy s = *Strategy::Fixed(ChannelFamily::kPrivacy,
                                *ChannelSpec::Ldp(3, 0.0, 5.0), 10);
  OptConfig config;
  config.horizon = 10;
  RngStream rng(2, 0);
  EXPECT_EQ(SgdRun(oracle, s, config, rng).status().code(),
            absl::StatusCode::kFailedPrecondition);
}

TEST(SgdRunTest, RejectsShortStrategyAndBadDomain) {
  QuadraticOracle oracle = Quadratic(0.0);
  OptConfig config;
  config.horizon = 10;
  RngStream rng(2, 0);
  EXPECT_FALSE(SgdRun(oracle, IdentityStrategy(3, 5), config, rng).ok());
  config.domain = *Domain::Box(4, 1.0);
  EXPECT_FALSE(SgdRun(oracle, IdentityStrategy(3, 10), config, rng).ok());
}

}  // namespace
}  // namespace infocon
