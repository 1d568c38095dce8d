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

#include "infocon/core/domain.h"

#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

namespace infocon {
namespace {

Vector Vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

TEST(DomainTest, RejectsBadShape) {
  EXPECT_FALSE(Domain::Box(0, 1.0).ok());
  EXPECT_FALSE(Domain::Box(2, 0.0).ok());
  EXPECT_FALSE(Domain::L1Ball(2, -1.0).ok());
  EXPECT_FALSE(Domain::Box(2, std::numeric_limits<double>::infinity()).ok());
  EXPECT_TRUE(Domain::L2Ball(2, std::numeric_limits<double>::infinity()).ok());
}

TEST(DomainTest, BoxClamps) {
  ASSERT_OK_AND_ASSIGN(Domain box, Domain::Box(2, 1.0));
  EXPECT_EQ(box.Project(Vec2(2, -3)), Vec2(1, -1));
}

TEST(DomainTest, L2InteriorUnchanged) {
  ASSERT_OK_AND_ASSIGN(Domain ball, Domain::L2Ball(2, 5.0));
  EXPECT_EQ(ball.Project(Vec2(3, 4)), Vec2(3, 4));
}

TEST(DomainTest, L1ProjectionMatchesGridSearch) {
  ASSERT_OK_AND_ASSIGN(Domain ball, Domain::L1Ball(2, 1.0));
  const Vector x = Vec2(1, 1);
  // Dense grid over the unit l1 ball.
  const int n = 2000;
  double best = std::numeric_limits<double>::infinity();
  Vector argbest;
  for (int i = -n; i <= n; ++i) {
    for (int j = -n; j <= n; ++j) {
      const Vector y = Vec2(static_cast<double>(i) / n,
                            static_cast<double>(j) / n);
      if (y.cwiseAbs().sum() > 1.0 + 1e-12) continue;
      const double dist = (x - y).squaredNorm();
      if (dist < best) {
        best = dist;
        argbest = y;
      }
    }
  }
  EXPECT_NEAR(argbest[0], 0.5, 1e-12);
  EXPECT_NEAR(argbest[1], 0.5, 1e-12);
  const Vector p = ball.Project(x);
  EXPECT_NEAR(p[0], 0.5, 1e-15);
  EXPECT_NEAR(p[1], 0.5, 1e-15);
}

Vector RandomFeasible(const Domain& dom, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vector y(dom.dimension());
  for (Eigen::Index i = 0; i < y.size(); ++i) y[i] = u(gen) * dom.radius();
  std::uniform_real_distribution<double> shrink(0.0, 1.0);
  const double s = shrink(gen);
  switch (dom.kind()) {
    case Domain::Kind::kBox:
      return y * s;
    case Domain::Kind::kL1Ball:
      return y * (s * dom.radius() / y.cwiseAbs().sum());
    case Domain::Kind::kL2Ball:
      return y * (s * dom.radius() / y.norm());
  }
  return y;
}

TEST(DomainTest, ProjectionIsOptimalAndFeasible) {
  std::mt19937_64 gen(5);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> radius(0.1, 3.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = 1 + trial % 9;
    const double r = radius(gen);
    Domain dom = trial % 3 == 0   ? *Domain::Box(d, r)
                 : trial % 3 == 1 ? *Domain::L1Ball(d, r)
                                  : *Domain::L2Ball(d, r);
    Vector x(d);
    for (int i = 0; i < d; ++i) x[i] = 2.0 * normal(gen);
    const Vector p = dom.Project(x);
    ASSERT_TRUE(dom.Contains(p, 1e-9)) << dom.DebugString();
    const double dist = (x - p).norm();
    for (int k = 0; k < 100; ++k) {
      const Vector y = RandomFeasible(dom, gen);
      ASSERT_LE(dist, (x - y).norm() + 1e-9);
    }
  }
}

}  // namespace
}  // namespace infocon
