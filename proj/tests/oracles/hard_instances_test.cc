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

#include "infocon/oracles/hard_instances.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

namespace infocon {
namespace {

using ::infocon::testing::MeanAccumulator;

Vector Signs(std::initializer_list<double> s) {
  Vector v(static_cast<Eigen::Index>(s.size()));
  int i = 0;
  for (double x : s) v[i++] = x;
  return v;
}

Vector RandomInBox(int d, double b, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-b, b);
  Vector x(d);
  for (int i = 0; i < d; ++i) x[i] = u(gen);
  return x;
}

// f+-_i written out with absolute values, independent of the per-coordinate
// quadratic form used by the library.
double GscDirect(const StronglyConvexInstance& g, const Vector& x) {
  const double th = g.theta(), b = g.b();
  double sum = 0.0;
  for (int i = 0; i < x.size(); ++i) {
    const double fp = th * b * std::abs(x[i] + b) +
                      (1 - th) / 4 * (x[i] + b) * (x[i] + b);
    const double fm = th * b * std::abs(x[i] - b) +
                      (1 - th) / 4 * (x[i] - b) * (x[i] - b);
    const double w = (1 + 2 * g.delta() * g.v()[i]) / 2;
    sum += w * fp + (1 - w) * fm;
  }
  return g.a() * sum;
}

// ---------------------------------------------------------------------------
// Convex family.

TEST(ConvexHardInstanceTest, Parameterization) {
  ASSERT_OK_AND_ASSIGN(
      ConvexHardInstance g,
      ConvexHardInstance::Create(Signs({1, -1, 1, 1}), 0.1, 2.0, 3.0, 1.5,
                                 ConvexRegime::kP12));
  const double q = 3.0;
  EXPECT_NEAR(g.a(), 2 * 2.0 * 0.1 / std::pow(4.0, 1 / q), 1e-15);
  EXPECT_NEAR(g.b(), 3.0 / (2 * std::pow(4.0, 1 / 1.5)), 1e-15);
  EXPECT_DOUBLE_EQ(g.bound_exponent(), 3.0);
  ASSERT_OK_AND_ASSIGN(
      ConvexHardInstance h,
      ConvexHardInstance::Create(Signs({1, -1, 1, 1}), 0.1, 2.0, 3.0, 4.0,
                                 ConvexRegime::kPinf));
  EXPECT_NEAR(h.a(), 2 * 2.0 * 0.1 / 4, 1e-15);
}

TEST(ConvexHardInstanceTest, RejectsBadParameters) {
  const Vector v = Signs({1, -1});
  EXPECT_FALSE(ConvexHardInstance::Create(v, -0.1, 1, 1, 2, ConvexRegime::kP12).ok());
  EXPECT_FALSE(ConvexHardInstance::Create(v, 0.6, 1, 1, 2, ConvexRegime::kP12).ok());
  EXPECT_FALSE(ConvexHardInstance::Create(v, 0.1, 0, 1, 2, ConvexRegime::kP12).ok());
  EXPECT_FALSE(ConvexHardInstance::Create(v, 0.1, 1, 1, 3, ConvexRegime::kP12).ok());
  EXPECT_FALSE(ConvexHardInstance::Create(v, 0.1, 1, 1, 1.5, ConvexRegime::kPinf).ok());
  EXPECT_FALSE(ConvexHardInstance::Create(Signs({1, 0.5}), 0.1, 1, 1, 2,
                                          ConvexRegime::kP12).ok());
}

TEST(ConvexHardInstanceTest, ValuesAndGradient) {
  // d = 2, p = 2: a = 2 B delta / sqrt 2 = 1 and b = D / (2 sqrt 2) = 1.
  ASSERT_OK_AND_ASSIGN(
      ConvexHardInstance g,
      ConvexHardInstance::Create(Signs({1, 1}), 1.0 / 6.0, 3.0 * std::sqrt(2.0),
                                 2.0 * std::sqrt(2.0), 2.0, ConvexRegime::kP12));
  EXPECT_NEAR(g.a(), 1.0, 1e-15);
  EXPECT_NEAR(g.b(), 1.0, 1e-15);
  EXPECT_NEAR(*g.Value(Vector::Zero(2)), 2.0, 1e-15);
  EXPECT_EQ(*g.Value(g.Minimizer()), 0.0);
  EXPECT_EQ(g.MinValue(), 0.0);
  std::mt19937_64 gen(1);
  const Vector g0 = *g.Gradient(Vector::Zero(2));
  EXPECT_NEAR(g0[0], -1.0, 1e-15);
  for (int k = 0; k < 100; ++k) {
    const Vector x = RandomInBox(2, 1.0, gen);
    EXPECT_EQ(*g.Gradient(x), g0);
    EXPECT_NEAR(*g.Value(x), g.AffineGap(x), 1e-14);
  }
  Vector out(2);
  out << 1.5, 0.0;
  EXPECT_EQ(g.Value(out).status().code(), absl::StatusCode::kOutOfRange);
}

TEST(ConvexHardInstanceTest, P12ZeroBiasIsFair) {
  ASSERT_OK_AND_ASSIGN(
      ConvexHardInstance g,
      ConvexHardInstance::Create(Signs({1, -1, 1}), 0.0, 1.0, 1.0, 2.0,
                                 ConvexRegime::kP12));
  RngStream rng(1, 1);
  Vector s;
  std::vector<int> minus(3, 0);
  const int n = 100000;
  for (int k = 0; k < n; ++k) {
    ASSERT_OK(g.Sample(Vector::Zero(3), rng, &s));
    for (int i = 0; i < 3; ++i) minus[i] += s[i] < 0;
  }
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(static_cast<double>(minus[i]) / n, 0.5, 5 * std::sqrt(0.25 / n));
  }
}

TEST(ConvexHardInstanceTest, P12MeanOneDimension) {
  ASSERT_OK_AND_ASSIGN(
      ConvexHardInstance g,
      ConvexHardInstance::Create(Signs({1}), 0.1, 1.0, 1.0, 1.0,
                                 ConvexRegime::kP12));
  RngStream rng(2, 2);
  MeanAccumulator acc;
  Vector s;
  for (int k = 0; k < 1000000; ++k) {
    ASSERT_OK(g.Sample(Vector::Zero(1), rng, &s));
    acc.Add(s[0]);
  }
  EXPECT_NEAR(acc.mean(), -0.2, 5 * acc.StandardError());
}

TEST(ConvexHardInstanceTest, SampleNormIsExactlyBound) {
  std::mt19937_64 gen(3);
  for (double p : {1.0, 1.25, 1.5, 2.0}) {
    ASSERT_OK_AND_ASSIGN(
        ConvexHardInstance g,
        ConvexHardInstance::Create(Signs({1, -1, 1, -1, 1, 1, -1}), 1.0 / 6,
                                   2.5, 1.0, p, ConvexRegime::kP12));
    RngStream rng(3, 3);
    Vector s;
    for (int k = 0; k < 2000; ++k) {
      ASSERT_OK(g.Sample(RandomInBox(7, g.b(), gen), rng, &s));
      EXPECT_NEAR(LpNorm(s, g.bound_exponent()), 2.5, 1e-12);
    }
  }
}

TEST(ConvexHardInstanceTest, PinfLaw) {
  ASSERT_OK_AND_ASSIGN(
      ConvexHardInstance g,
      ConvexHardInstance::Create(Signs({1, -1}), 0.1, 1.0, 1.0, 2.0,
                                 ConvexRegime::kPinf));
  RngStream rng(4, 4);
  std::vector<MeanAccumulator> acc(2);
  Vector s;
  for (int k = 0; k < 1000000; ++k) {
    ASSERT_OK(g.Sample(Vector::Zero(2), rng, &s));
    ASSERT_EQ((s.array() != 0.0).count(), 1);
    ASSERT_EQ(LpNorm(s, kInfinityNorm), 1.0);
    acc[0].Add(s[0]);
    acc[1].Add(s[1]);
  }
  EXPECT_NEAR(acc[0].mean(), -0.1, 5 * acc[0].StandardError());
  EXPECT_NEAR(acc[1].mean(), 0.1, 5 * acc[1].StandardError());
}

TEST(ConvexHardInstanceTest, PinfZeroBiasHasZeroMean) {
  ASSERT_OK_AND_ASSIGN(
      ConvexHardInstance g,
      ConvexHardInstance::Create(Signs({1, -1, -1}), 0.0, 1.0, 1.0, 3.0,
                                 ConvexRegime::kPinf));
  RngStream rng(5, 5);
  std::vector<MeanAccumulator> acc(3);
  Vector s;
  for (int k = 0; k < 200000; ++k) {
    ASSERT_OK(g.Sample(Vector::Zero(3), rng, &s));
    for (int i = 0; i < 3; ++i) acc[i].Add(s[i]);
  }
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(acc[i].mean(), 0.0, 5 * acc[i].StandardError());
  }
}

TEST(ConvexHardInstanceTest, CoordinateShortcutMatchesFullSampleInOneDim) {
  for (ConvexRegime regime : {ConvexRegime::kP12, ConvexRegime::kPinf}) {
    ASSERT_OK_AND_ASSIGN(
        ConvexHardInstance g,
        ConvexHardInstance::Create(Signs({-1}), 0.2, 1.0, 1.0, 2.0, regime));
    RngStream a(6, 6), b(6, 6);
    Vector s;
    for (int k = 0; k < 100; ++k) {
      ASSERT_OK(g.Sample(Vector::Zero(1), a, &s));
      EXPECT_EQ(*g.SampleCoordinate(Vector::Zero(1), 0, b), s[0]);
    }
  }
}

TEST(ConvexHardInstanceTest, MidpointConvexity) {
  ASSERT_OK_AND_ASSIGN(
      ConvexHardInstance g,
      ConvexHardInstance::Create(Signs({1, -1, 1}), 0.1, 1.0, 2.0, 2.0,
                                 ConvexRegime::kP12));
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(0, 1);
  for (int k = 0; k < 10000; ++k) {
    const Vector x = RandomInBox(3, g.b(), gen), y = RandomInBox(3, g.b(), gen);
    const double l = u(gen);
    EXPECT_LE(*g.Value(l * x + (1 - l) * y),
              l * *g.Value(x) + (1 - l) * *g.Value(y) + 1e-9);
  }
}

// The law of a sample under v and under v with coordinate i flipped, read
// off the sampler's own probabilities.
TEST(ConvexHardInstanceTest, LikelihoodRatioFromSamplerLaw) {
  const double delta = 0.15;
  for (ConvexRegime regime : {ConvexRegime::kP12, ConvexRegime::kPinf}) {
    const Vector v = Signs({1, -1, 1});
    ASSERT_OK_AND_ASSIGN(ConvexHardInstance g,
                         ConvexHardInstance::Create(v, delta, 1.0, 1.0, 2.0,
                                                    regime));
    RngStream rng(8, 8);
    Vector s;
    for (int k = 0; k < 200; ++k) {
      ASSERT_OK(g.Sample(Vector::Zero(3), rng, &s));
      for (int i = 0; i < 3; ++i) {
        if (s[i] == 0.0) continue;
        Vector flipped = v;
        flipped[i] = -flipped[i];
        ASSERT_OK_AND_ASSIGN(ConvexHardInstance h,
                             ConvexHardInstance::Create(flipped, delta, 1.0,
                                                        1.0, 2.0, regime));
        const double ratio = h.SampleProbability(s) / g.SampleProbability(s);
        const int sign = s[i] > 0 ? 1 : -1;
        EXPECT_NEAR(ratio, LikelihoodRatio(delta, static_cast<int>(v[i]) * sign),
                    1e-12);
      }
    }
  }
}

TEST(GammaTest, Values) {
  // 4 (1/6) / sqrt(1 - 4/36) = (2/3) / sqrt(8/9) = 1/sqrt(2).
  EXPECT_NEAR(Gamma(1.0 / 6.0, ConvexRegime::kP12, 16), 0.70710678118654752,
              1e-15);
  EXPECT_EQ(Gamma(0.0, ConvexRegime::kP12, 4), 0.0);
  EXPECT_NEAR(Gamma(1.0 / 6.0, ConvexRegime::kPinf, 16),
              0.70710678118654752 / 4.0, 1e-15);
  EXPECT_NEAR(LikelihoodRatio(1.0 / 6.0, 1), 2.0, 1e-15);
  EXPECT_NEAR(LikelihoodRatio(1.0 / 6.0, -1), 0.5, 1e-15);
}

// ---------------------------------------------------------------------------
// Strongly convex family.

TEST(StronglyConvexInstanceTest, ClosedForms) {
  ASSERT_OK_AND_ASSIGN(StronglyConvexInstance g,
                       StronglyConvexInstance::Create(Signs({1}), 0.1, 0.0, 1.0,
                                                      1.0));
  EXPECT_NEAR(g.Minimizer()[0], -0.2, 1e-15);
  ASSERT_OK_AND_ASSIGN(StronglyConvexInstance h,
                       StronglyConvexInstance::Create(Signs({1}), 0.0, 0.0, 1.0,
                                                      1.0));
  EXPECT_NEAR(*h.Value(Vector::Zero(1)), 0.25, 1e-15);
  EXPECT_NEAR(g.alpha(), 0.25, 1e-15);
  EXPECT_NEAR(g.bound(), 1.0, 1e-15);
}

TEST(StronglyConvexInstanceTest, RejectsBadParameters) {
  // theta = 0.5 allows delta up to (1/2)(0.5/1.5) = 1/6.
  EXPECT_TRUE(StronglyConvexInstance::Create(Signs({1}), 1.0 / 6, 0.5, 1, 1).ok());
  EXPECT_FALSE(StronglyConvexInstance::Create(Signs({1}), 0.17, 0.5, 1, 1).ok());
  EXPECT_FALSE(StronglyConvexInstance::Create(Signs({1}), 0.1, 1.0, 1, 1).ok());
  EXPECT_TRUE(StronglyConvexInstance::Create(Signs({1}), 0.0, 1.0, 1, 1).ok());
  EXPECT_FALSE(StronglyConvexInstance::Create(Signs({1}), 0.0, -0.1, 1, 1).ok());
  EXPECT_FALSE(StronglyConvexInstance::Create(Signs({1}), 0.0, 0.5, 0, 1).ok());
}

TEST(StronglyConvexInstanceTest, FromModulus) {
  const Vector v = Signs({1, -1, 1, -1});
  ASSERT_OK_AND_ASSIGN(StronglyConvexInstance g,
                       StronglyConvexInstance::FromModulus(v, 0.05, 0.2, 2.0, 4.0));
  EXPECT_NEAR(g.b(), 1.0, 1e-15);
  EXPECT_NEAR(g.a(), 1.0, 1e-15);
  EXPECT_NEAR(g.theta(), 1.0 - 4 * 0.2 / g.a(), 1e-12);
  EXPECT_NEAR(g.alpha(), 0.2, 1e-12);
  EXPECT_NEAR(g.bound(), 2.0, 1e-12);
  EXPECT_FALSE(StronglyConvexInstance::FromModulus(v, 0.05, 0.2, 2.0, 40.0).ok());
}

TEST(StronglyConvexInstanceTest, ValueMatchesDirectFormula) {
  std::mt19937_64 gen(9);
  ASSERT_OK_AND_ASSIGN(StronglyConvexInstance g,
                       StronglyConvexInstance::Create(Signs({1, -1, -1, 1, 1}),
                                                      0.08, 0.4, 1.7, 0.6));
  for (int k = 0; k < 1000; ++k) {
    const Vector x = RandomInBox(5, g.b(), gen);
    EXPECT_NEAR(*g.Value(x), GscDirect(g, x), 1e-12);
  }
  EXPECT_NEAR(*g.Value(g.Minimizer()), g.MinValue(), 1e-12);
}

TEST(StronglyConvexInstanceTest, GradientVanishesAtMinimizer) {
  ASSERT_OK_AND_ASSIGN(StronglyConvexInstance g,
                       StronglyConvexInstance::Create(Signs({1, -1, 1}), 0.1,
                                                      0.3, 2.0, 1.5));
  ASSERT_OK_AND_ASSIGN(Vector grad, g.Gradient(g.Minimizer()));
  EXPECT_LE(grad.cwiseAbs().maxCoeff(), 1e-9);
  std::mt19937_64 gen(10);
  for (int k = 0; k < 1000; ++k) {
    EXPECT_GE(*g.Value(RandomInBox(3, g.b(), gen)), g.MinValue() - 1e-12);
  }
}

TEST(StronglyConvexInstanceTest, GradientMatchesFiniteDifferences) {
  std::mt19937_64 gen(11);
  ASSERT_OK_AND_ASSIGN(StronglyConvexInstance g,
                       StronglyConvexInstance::Create(Signs({1, -1, 1, -1}),
                                                      0.1, 0.25, 1.3, 0.8));
  const double h = 1e-6 * g.b();
  for (int k = 0; k < 1000; ++k) {
    const Vector x = RandomInBox(4, g.b() * (1 - 1e-5), gen);
    ASSERT_OK_AND_ASSIGN(Vector grad, g.Gradient(x));
    for (int i = 0; i < 4; ++i) {
      Vector xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      const double fd = (GscDirect(g, xp) - GscDirect(g, xm)) / (2 * h);
      EXPECT_NEAR(grad[i], fd, 1e-4 * std::max(std::abs(fd), 1e-3));
    }
  }
}

TEST(StronglyConvexInstanceTest, DegenerateThetaOneSamples) {
  ASSERT_OK_AND_ASSIGN(StronglyConvexInstance g,
                       StronglyConvexInstance::Create(Signs({1, -1}), 0.0, 1.0,
                                                      2.0, 0.5));
  RngStream rng(12, 12);
  Vector s;
  int plus = 0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) {
    ASSERT_OK(g.Sample(Vector::Zero(2), rng, &s));
    ASSERT_EQ(std::abs(s[0]), 1.0);  // a theta b
    plus += s[0] > 0;
  }
  EXPECT_NEAR(static_cast<double>(plus) / n, 0.5, 5 * std::sqrt(0.25 / n));
}

TEST(StronglyConvexInstanceTest, SampleNormBoundedAndMeanIsGradient) {
  std::mt19937_64 gen(13);
  ASSERT_OK_AND_ASSIGN(StronglyConvexInstance g,
                       StronglyConvexInstance::Create(Signs({1, -1, 1}), 0.12,
                                                      0.2, 1.1, 0.9));
  RngStream rng(13, 13);
  Vector s;
  for (int k = 0; k < 100000; ++k) {
    ASSERT_OK(g.Sample(RandomInBox(3, g.b(), gen), rng, &s));
    ASSERT_LE(s.norm(), g.bound() + 1e-12);
  }
  // Corners attain the bound.
  ASSERT_OK(g.Sample(Vector::Constant(3, g.b()), rng, &s));
  EXPECT_LE(s.norm(), g.bound() + 1e-12);

  const Vector x = RandomInBox(3, g.b(), gen);
  ASSERT_OK_AND_ASSIGN(Vector grad, g.Gradient(x));
  std::vector<MeanAccumulator> acc(3);
  for (int k = 0; k < 300000; ++k) {
    ASSERT_OK(g.Sample(x, rng, &s));
    for (int i = 0; i < 3; ++i) acc[i].Add(s[i]);
  }
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(acc[i].mean(), grad[i], 5 * acc[i].StandardError());
  }
}

TEST(StronglyConvexInstanceTest, ConvexityAndStrongConvexity) {
  std::mt19937_64 gen(14);
  std::uniform_real_distribution<double> u(0, 1);
  ASSERT_OK_AND_ASSIGN(StronglyConvexInstance g,
                       StronglyConvexInstance::Create(Signs({1, -1, 1, 1}),
                                                      0.1, 0.3, 1.5, 1.2));
  auto h = [&](const Vector& x) {
    return *g.Value(x) - g.alpha() / 2 * x.squaredNorm();
  };
  for (int k = 0; k < 10000; ++k) {
    const Vector x = RandomInBox(4, g.b(), gen), y = RandomInBox(4, g.b(), gen);
    const double l = u(gen);
    const Vector m = l * x + (1 - l) * y;
    EXPECT_LE(*g.Value(m), l * *g.Value(x) + (1 - l) * *g.Value(y) + 1e-9);
    EXPECT_LE(h(m), l * h(x) + (1 - l) * h(y) + 1e-9);
  }
}

TEST(BAlphaTest, Cases) {
  ASSERT_OK_AND_ASSIGN(StronglyConvexInstance g,
                       StronglyConvexInstance::Create(Signs({1, 1, -1, 1}), 0.1,
                                                      0.0, 1.0, 1.0));
  // B / alpha = 4 b sqrt(d) against b sqrt(d) / 4.
  EXPECT_NEAR(g.bound() / g.alpha(), 8.0, 1e-12);
  EXPECT_TRUE(CheckBAlpha(g, g.b()));
  ASSERT_OK_AND_ASSIGN(StronglyConvexInstance flat,
                       StronglyConvexInstance::Create(Signs({1, 1}), 0.0, 1.0,
                                                      1.0, 1.0));
  EXPECT_TRUE(CheckBAlpha(flat, flat.b()));
  EXPECT_FALSE(CheckBAlpha(1.0, 10.0, 1.0, 16));
}

}  // namespace
}  // namespace infocon
