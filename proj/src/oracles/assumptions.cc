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

#include "infocon/oracles/assumptions.h"

#include <cmath>

#include "absl/strings/str_format.h"

namespace infocon {

absl::StatusOr<AssumptionReport> CheckOracleAssumptions(
    const StochasticOracle& oracle, const Vector& x, int64_t n,
    RngStream& rng) {
  if (n < 10000) {
    return absl::InvalidArgumentError(
        absl::StrFormat("need at least 1e4 samples, got %d", n));
  }
  absl::StatusOr<Vector> grad = oracle.Gradient(x);
  if (!grad.ok()) return grad.status();
  const int d = oracle.dimension();
  const double q = oracle.bound_exponent();
  AssumptionReport report;
  report.bound = oracle.bound();

  // Shifted accumulation around the gradient keeps the variance sums exact
  // when the noise is small relative to the mean.
  Vector sum = Vector::Zero(d), sum_sq = Vector::Zero(d), sample;
  for (int64_t k = 0; k < n; ++k) {
    if (absl::Status s = oracle.Sample(x, rng, &sample); !s.ok()) return s;
    const double norm = LpNorm(sample, q);
    report.max_norm = std::max(report.max_norm, norm);
    if (!(norm <= report.bound * (1.0 + 1e-9)) && report.bound_ok) {
      report.bound_ok = false;
      report.violation = absl::StrFormat(
          "sample %d has norm %.17g above bound %.17g", k, norm, report.bound);
    }
    const Vector centered = sample - *grad;
    sum += centered;
    sum_sq += centered.cwiseProduct(centered);
  }
  const double nn = static_cast<double>(n);
  report.bias.resize(d);
  report.standard_error.resize(d);
  for (int i = 0; i < d; ++i) {
    const double mean = sum[i] / nn;
    const double var = std::max(0.0, (sum_sq[i] - nn * mean * mean) / (nn - 1));
    const double se = std::sqrt(var / nn);
    report.bias[i] = mean;
    report.standard_error[i] = se;
    const double tol =
        se > 0.0 ? 5.0 * se : 1e-12 * std::max(1.0, std::abs((*grad)[i]));
    if (!(std::abs(mean) <= tol) && report.bias_ok) {
      report.bias_ok = false;
      if (report.violation.empty()) {
        report.violation = absl::StrFormat(
            "coordinate %d bias %.6g exceeds %.6g", i, mean, tol);
      }
    }
  }
  return report;
}

}  // namespace infocon
