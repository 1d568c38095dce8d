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

#ifndef INFOCON_HARNESS_SUITES_H_
#define INFOCON_HARNESS_SUITES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "infocon/harness/experiment.h"
#include "infocon/harness/verify.h"

namespace infocon {

// Exact information check on one tiny oblivious instance (gc_p12, B = 1,
// D = 2, p = 2) observed through the same sampler at every step.
struct MiCheckResult {
  int d = 0;
  int64_t horizon = 0;
  double delta = 0.0;
  std::string channel;  // "uniform" or "skewed"
  double information = 0.0;  // sum over coordinates, nats
  double bound = 0.0;
  bool passed = false;
};

// probs empty means the uniform sampler.
absl::StatusOr<MiCheckResult> MiCheck(int d, int64_t horizon, double delta,
                                      const std::vector<double>& probs);

// p(i) proportional to (i + 1)^2.
std::vector<double> SkewedProbabilities(int d);

std::string FormatMiCheck(const MiCheckResult& r);

// Canned experiments. Steps are tuned to the horizon, which keeps each
// curve in its asymptotic regime over the whole T grid.
ExperimentConfig PiStarRateConfig(uint64_t seed, int trials);
ExperimentConfig RcdConvexConfig(uint64_t seed, int trials);
ExperimentConfig RcdStronglyConvexConfig(uint64_t seed, int trials);
ExperimentConfig LdpSgdConfig(uint64_t seed, int trials);
ExperimentConfig SeparationConfig(uint64_t seed, int trials);
// Small LDP-SGD sweep used for the determinism comparison.
ExperimentConfig DeterminismSweepConfig(uint64_t seed);

// pi* with r in {1, 8, 64}: T-slope in [-0.65, -0.35] per r, and
// err(r = 1) / err(r = 64) in [3, 20] at the largest T.
CheckResult CheckPiStarRate(uint64_t seed, const RunOptions& options);

// RCD: convex T-slope in [-0.65, -0.35], strongly convex in [-1.25, -0.75],
// d-exponents within 0.35 of 0.5 and 1.0.
CheckResult CheckRcdRates(uint64_t seed, const RunOptions& options);

// LDP-SGD at d = 16, T = 2^16: err(eps = 0.25) / err(eps = 1) in [2, 8].
CheckResult CheckLdpSgdScaling(uint64_t seed, const RunOptions& options);

// d = 1024, s = 32, delta = 0.5, T = 64 d: ACD under its error bound and at
// most half the nonadaptive error.
CheckResult CheckSeparation(uint64_t seed, const RunOptions& options);

// Exact information bound over (d, T) in {1,2,3}^2, three deltas, uniform
// and skewed samplers.
CheckResult CheckInformationBound();

// verify twice, and one sweep at jobs 1 and 8, compared byte for byte.
CheckResult CheckDeterminism(uint64_t seed);

}  // namespace infocon

#endif  // INFOCON_HARNESS_SUITES_H_
