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

#include "infocon/analysis/rate_fit.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace infocon {

double RateFit::Predict(double scale) const {
  return std::exp(intercept) * std::pow(scale, slope);
}

absl::StatusOr<RateFit> FitRate(
    absl::Span<const std::pair<double, double>> points) {
  if (points.size() < 3) {
    return absl::InvalidArgumentError(
        absl::StrFormat("need at least 3 points, got %d", points.size()));
  }
  double mx = 0.0, my = 0.0;
  for (const auto& [scale, error] : points) {
    if (!(scale > 0.0) || !(error > 0.0) || std::isinf(scale) ||
        std::isinf(error)) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "points must be positive and finite, got (%g, %g)", scale, error));
    }
    mx += std::log(scale);
    my += std::log(error);
  }
  const double n = static_cast<double>(points.size());
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [scale, error] : points) {
    const double dx = std::log(scale) - mx;
    const double dy = std::log(error) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx <= 0.0) {
    return absl::InvalidArgumentError("all scales are equal");
  }
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  // A flat, noiseless series is fit exactly.
  fit.r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  fit.points.assign(points.begin(), points.end());
  return fit;
}

}  // namespace infocon
