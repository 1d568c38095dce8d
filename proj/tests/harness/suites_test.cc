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

#include "infocon/harness/suites.h"

#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "infocon/harness/verify.h"
#include "infocon/oracles/hard_instances.h"
#include "test_util.h"

namespace infocon {
namespace {

// Independent enumeration: V uniform on {-1,1}^d, each step reveals a
// coordinate j ~ probs and the sign of X(j), P(X(j) < 0) = (1 + 2 delta v_j)/2.
double EnumeratedInformation(int d, int horizon, double delta,
                             const std::vector<double>& probs) {
  const int symbols = 2 * d;
  int outcomes = 1;
  for (int t = 0; t < horizon; ++t) outcomes *= symbols;
  double total = 0.0;
  for (int i = 0; i < d; ++i) {
    // p(y | v_i) averaged over the other coordinates, and p(y).
    std::map<int, double> joint[2];
    for (int vbits = 0; vbits < (1 << d); ++vbits) {
      const int vi = (vbits >> i) & 1;
      for (int y = 0; y < outcomes; ++y) {
        double p = 1.0 / (1 << d);
        int rest = y;
        for (int t = 0; t < horizon; ++t) {
          const int sym = rest % symbols;
          rest /= symbols;
          const int j = sym / 2;
          const double v = ((vbits >> j) & 1) ? 1.0 : -1.0;
          const double minus = (1.0 + 2.0 * delta * v) / 2.0;
          p *= probs[j] * (sym % 2 == 0 ? minus : 1.0 - minus);
        }
        joint[vi][y] += p;
      }
    }
    for (int y = 0; y < outcomes; ++y) {
      const double py = joint[0][y] + joint[1][y];
      for (int vi = 0; vi < 2; ++vi) {
        const double pj = joint[vi][y];
        if (pj > 0.0) total += pj * std::log(pj / (0.5 * py));
      }
    }
  }
  return total;
}

TEST(MiCheckTest, MatchesIndependentEnumeration) {
  for (int d = 1; d <= 3; ++d) {
    for (int t = 1; t <= 3; ++t) {
      for (bool skewed : {false, true}) {
        const std::vector<double> probs =
            skewed ? SkewedProbabilities(d) : std::vector<double>(d, 1.0 / d);
        ASSERT_OK_AND_ASSIGN(
            MiCheckResult r,
            MiCheck(d, t, 0.1, skewed ? probs : std::vector<double>()));
        EXPECT_NEAR(r.information, EnumeratedInformation(d, t, 0.1, probs),
                    1e-12)
            << d << " " << t << " " << skewed;
        EXPECT_TRUE(r.passed);
      }
    }
  }
}

TEST(MiCheckTest, ExampleLineAndBound) {
  ASSERT_OK_AND_ASSIGN(MiCheckResult r, MiCheck(2, 2, 0.1, {}));
  // C = (2 - 1) * 1.2 / 0.8 with T = 2.
  const double gamma = Gamma(0.1, ConvexRegime::kP12, 2);
  EXPECT_NEAR(r.bound, 0.5 * 1.5 * 2 * gamma * gamma, 1e-12);
  EXPECT_NEAR(r.bound, 0.25, 1e-12);
  EXPECT_THAT(FormatMiCheck(r), ::testing::EndsWith("bound=0.25 PASS"));
  EXPECT_FALSE(MiCheck(4, 2, 0.1, {}).ok());
  EXPECT_FALSE(MiCheck(2, 0, 0.1, {}).ok());
}

TEST(SkewedProbabilitiesTest, NormalizedAndIncreasing) {
  const std::vector<double> p = SkewedProbabilities(3);
  EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-15);
  EXPECT_NEAR(p[2] / p[0], 9.0, 1e-12);
}

TEST(SuiteConfigsTest, CannedGridsValidate) {
  for (const ExperimentConfig& c :
       {PiStarRateConfig(1, 2), RcdConvexConfig(1, 2),
        RcdStronglyConvexConfig(1, 2), LdpSgdConfig(1, 2),
        SeparationConfig(1, 2), DeterminismSweepConfig(1)}) {
    EXPECT_TRUE(ValidateConfig(c).ok()) << c.id << ": " << ValidateConfig(c);
  }
}

TEST(VerifyReportTest, FormatsOneLinePerCheck) {
  const std::vector<CheckResult> results = {{"a", true, "x=1"},
                                            {"b", false, "y=2"}};
  EXPECT_EQ(FormatReport(results), "PASS a: x=1\nFAIL b: y=2\n1/2 checks passed\n");
  EXPECT_FALSE(AllPassed(results));
  EXPECT_TRUE(AllPassed({results[0]}));
}

TEST(VerifyChecksTest, CheapChecksPass) {
  EXPECT_TRUE(CheckLdpExactness().passed);
  EXPECT_TRUE(CheckPsiClosedForms(3).passed);
  EXPECT_TRUE(CheckBAlphaBound(3).passed);
  EXPECT_TRUE(CheckInformationBound().passed);
}

}  // namespace
}  // namespace infocon
