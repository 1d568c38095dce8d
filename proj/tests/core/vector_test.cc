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

#include "infocon/core/vector.h"

#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

namespace infocon {
namespace {

TEST(NormTest, SmallExamples) {
  ASSERT_OK_AND_ASSIGN(Vector a, MakeVector({3, 4}));
  ASSERT_OK_AND_ASSIGN(Vector b, MakeVector({1, -1, 1}));
  ASSERT_OK_AND_ASSIGN(Vector c, MakeVector({1, -2}));
  EXPECT_DOUBLE_EQ(*Norm(a, 2), 5.0);
  EXPECT_DOUBLE_EQ(*Norm(b, 1), 3.0);
  EXPECT_DOUBLE_EQ(*Norm(c, kInfinityNorm), 2.0);
}

TEST(NormTest, RejectsExponentBelowOne) {
  Vector x = Vector::Ones(3);
  EXPECT_EQ(Norm(x, 0.5).status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_FALSE(Norm(x, std::nan("")).ok());
}

TEST(NormTest, LargeExponentDoesNotOverflow) {
  Vector x(2);
  x << 1e300, 1e300;
  EXPECT_NEAR(LpNorm(x, 64.0) / 1e300, std::pow(2.0, 1.0 / 64.0), 1e-12);
}

TEST(NormTest, MonotoneInExponent) {
  std::mt19937_64 gen(11);
  std::normal_distribution<double> normal;
  const double ps[] = {1.0, 1.1, 1.5, 2.0, 3.0, 8.0, 40.0, kInfinityNorm};
  for (int trial = 0; trial < 500; ++trial) {
    Vector x(1 + trial % 17);
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = normal(gen);
    for (size_t k = 1; k < std::size(ps); ++k) {
      EXPECT_LE(LpNorm(x, ps[k]), LpNorm(x, ps[k - 1]) * (1 + 1e-14));
    }
  }
}

TEST(MakeVectorTest, RejectsNonFiniteAndEmpty) {
  EXPECT_FALSE(MakeVector({1.0, std::nan("")}).ok());
  EXPECT_FALSE(MakeVector({std::numeric_limits<double>::infinity()}).ok());
  EXPECT_FALSE(MakeVector({}).ok());
}

TEST(HolderConjugateTest, Endpoints) {
  EXPECT_EQ(HolderConjugate(1.0), kInfinityNorm);
  EXPECT_EQ(HolderConjugate(kInfinityNorm), 1.0);
  EXPECT_DOUBLE_EQ(HolderConjugate(2.0), 2.0);
  EXPECT_DOUBLE_EQ(HolderConjugate(4.0), 4.0 / 3.0);
}

TEST(PowNonnegTest, MatchesStdPow) {
  for (double base : {0.0, 0.3, 1.0, 1.7, 12.5}) {
    for (double e : {0.0, 1.0, 2.0, 7.0, 11.0, 0.5, 1.0 / 11.0, 12.25}) {
      EXPECT_NEAR(PowNonneg(base, e), std::pow(base, e),
                  1e-14 * std::max(1.0, std::pow(base, e)));
    }
  }
}

}  // namespace
}  // namespace infocon
