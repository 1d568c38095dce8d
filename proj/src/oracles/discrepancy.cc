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

#include "infocon/oracles/discrepancy.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/strings/str_format.h"

namespace infocon {

CoordinateFamily ConvexCoordinateFamily(double a, double b, int dimension) {
  return {b, dimension, [a, b](int, double y, int nu) {
            return a * std::abs(y - nu * b);
          }};
}

CoordinateFamily StronglyConvexCoordinateFamily(double a, double b,
                                                double delta, double theta,
                                                int dimension) {
  return {b, dimension, [=](int, double y, int nu) {
            return a * ((1.0 - theta) / 4.0 * y * y +
                        (1.0 + 3.0 * theta) / 4.0 * b * b +
                        delta * nu * (1.0 + theta) * b * y);
          }};
}

absl::StatusOr<PsiResult> PsiMetric(const CoordinateFamily& family,
                                    double grid_step) {
  if (!(family.b > 0.0) || family.dimension < 1 || !family.value) {
    return absl::InvalidArgumentError("malformed coordinate family");
  }
  if (!(grid_step > 0.0) || grid_step > 1e-3 * family.b * (1.0 + 1e-12)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "grid step %g must lie in (0, 1e-3 b] with b = %g", grid_step,
        family.b));
  }
  const int64_t cells =
      static_cast<int64_t>(std::ceil(2.0 * family.b / grid_step - 1e-9));
  PsiResult result;
  result.per_coordinate.resize(family.dimension);
  for (int i = 0; i < family.dimension; ++i) {
    double min_plus = std::numeric_limits<double>::infinity();
    double min_minus = min_plus;
    double min_sum = min_plus;
    for (int64_t k = 0; k <= cells; ++k) {
      const double y = k == cells
                           ? family.b
                           : -family.b + 2.0 * family.b *
                                             static_cast<double>(k) / cells;
      const double plus = family.value(i, y, 1);
      const double minus = family.value(i, y, -1);
      min_plus = std::min(min_plus, plus);
      min_minus = std::min(min_minus, minus);
      min_sum = std::min(min_sum, plus + minus);
    }
    result.per_coordinate[i] = min_sum - min_plus - min_minus;
  }
  result.psi = *std::min_element(result.per_coordinate.begin(),
                                 result.per_coordinate.end());
  return result;
}

double ConvexPsiClosedForm(double a, double b) { return 2.0 * a * b; }

double StronglyConvexPsiClosedForm(double a, double b, double delta,
                                   double theta) {
  return 2.0 * a * b * b * delta * delta * (1.0 + theta) * (1.0 + theta) /
         (1.0 - theta);
}

}  // namespace infocon
