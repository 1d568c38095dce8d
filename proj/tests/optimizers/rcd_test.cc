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

#include "infocon/optimizers/rcd.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "infocon/optimizers/sgd.h"
#include "infocon/oracles/hard_instances.h"
#include "infocon/oracles/quadratic.h"
#include "test_util.h"

namespace infocon {
namespace {

using ::infocon::testing::MeanAccumulator;

TEST(RcdRunTest, OneDimensionMatchesSgdTrajectory) {
  Vector v(1);
  v << -1.0;
  ASSERT_OK_AND_ASSIGN(ConvexHardInstance inst,
                       ConvexHardInstance::Create(v, 0.3, 1.0, 1.0, 2.0,
                                                  ConvexRegime::kP12));
  std::vector<Vector> sgd_path, rcd_path;
  OptConfig config;
  config.horizon = 300;
  config.schedule = *StepSchedule::InvSqrt(0.2);
  config.observer = [&](int64_t, const Vector& x) { sgd_path.push_back(x); };
  RngStream a(4, 1), b(4, 1);
  Strategy s = *Strategy::Fixed(ChannelFamily::kUnconstrained,
                                *ChannelSpec::Identity(1), 300);
  ASSERT_OK_AND_ASSIGN(RunResult rs, SgdRun(inst, s, config, a));
  config.observer = [&](int64_t, const Vector& x) { rcd_path.push_back(x); };
  ASSERT_OK_AND_ASSIGN(RunResult rr, RcdRun(inst, config, b));
  ASSERT_EQ(sgd_path.size(), rcd_path.size());
  for (size_t t = 0; t < sgd_path.size(); ++t) {
    ASSERT_EQ(sgd_path[t], rcd_path[t]) << "step " << t + 1;
  }
  EXPECT_EQ(rs.output, rr.output);
}

TEST(RcdRunTest, ExactQuadraticConverges) {
  Vector c(4);
  c << 0.1, -0.2, 0.3, -0.4;
  ASSERT_OK_AND_ASSIGN(QuadraticOracle oracle,
                       QuadraticOracle::Create(c, *Domain::Box(4, 1.0), 0.0));
  OptConfig config;
  config.horizon = 1000;
  config.schedule = *StepSchedule::Constant(1.0 / 8.0);
  config.output = OutputMode::kLastIterate;
  RngStream rng(8, 0);
  ASSERT_OK_AND_ASSIGN(RunResult r, RcdRun(oracle, config, rng));
  EXPECT_LT((r.output - c).squaredNorm(), 1e-4);
  EXPECT_EQ(r.queries_used, 1000);
  EXPECT_EQ(r.total_bits, 1000 * (IndexBits(4) + 64));
}

TEST(RcdRunTest, ErrorHalvesWhenHorizonQuadruples) {
  const int d = 8;
  const double bound = 1.0, diameter = 2.0;
  auto mean_gap = [&](int64_t horizon) {
    MeanAccumulator gap;
    for (int trial = 0; trial < 300; ++trial) {
      RngStream rng(21, trial);
      ConvexHardInstance inst = *ConvexHardInstance::Create(
          RandomSignVector(d, rng), 0.2, bound, diameter, 2.0,
          ConvexRegime::kP12);
      OptConfig config;
      config.horizon = horizon;
      config.schedule =
          *StepSchedule::InvSqrt(diameter / (std::sqrt(d) * bound));
      gap.Add(*inst.Gap(RcdRun(inst, config, rng)->output));
    }
    return gap.mean();
  };
  const double ratio = mean_gap(1024) / mean_gap(4096);
  EXPECT_GT(ratio, 1.5);
  EXPECT_LT(ratio, 2.7);
}

TEST(RcdRunTest, IteratesStayFeasible) {
  Vector c = Vector::Constant(5, 3.0);
  ASSERT_OK_AND_ASSIGN(QuadraticOracle oracle,
                       QuadraticOracle::Create(c, *Domain::L2Ball(5, 1.0), 0.5));
  OptConfig config;
  config.horizon = 400;
  config.schedule = *StepSchedule::Constant(0.3);
  int64_t outside = 0;
  config.observer = [&](int64_t, const Vector& x) {
    if (!oracle.domain().Contains(x)) ++outside;
  };
  RngStream rng(9, 0);
  ASSERT_OK(RcdRun(oracle, config, rng).status());
  EXPECT_EQ(outside, 0);
}

}  // namespace
}  // namespace infocon
