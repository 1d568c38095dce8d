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

#ifndef INFOCON_ANALYSIS_RATE_FIT_H_
#define INFOCON_ANALYSIS_RATE_FIT_H_

#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"

namespace infocon {

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  std::vector<std::pair<double, double>> points;

  // exp(intercept) * scale^slope.
  double Predict(double scale) const;
};

// Least squares of log(error) on log(scale). Needs at least three points,
// all positive, and at least two distinct scales.
absl::StatusOr<RateFit> FitRate(
    absl::Span<const std::pair<double, double>> points);

}  // namespace infocon

#endif  // INFOCON_ANALYSIS_RATE_FIT_H_
