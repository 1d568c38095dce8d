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

#ifndef INFOCON_ORACLES_DISCREPANCY_H_
#define INFOCON_ORACLES_DISCREPANCY_H_

#include <functional>
#include <vector>

#include "absl/status/statusor.h"

namespace infocon {

// A decomposable family: coordinate i contributes g_i(y, nu) for the sign
// hypothesis nu in {-1, +1}, with y ranging over [-b, b].
struct CoordinateFamily {
  double b = 1.0;
  int dimension = 1;
  std::function<double(int i, double y, int nu)> value;
};

// G_c: g_i(y, nu) = a |y - nu b|.
CoordinateFamily ConvexCoordinateFamily(double a, double b, int dimension);
// G_sc: a ((1-theta)/4 y^2 + (1+3 theta)/4 b^2 + delta nu (1+theta) b y).
CoordinateFamily StronglyConvexCoordinateFamily(double a, double b,
                                                double delta, double theta,
                                                int dimension);

struct PsiResult {
  std::vector<double> per_coordinate;
  double psi = 0.0;
};

// psi_i = min_y [g_i(y,+1) + g_i(y,-1)] - min_y g_i(y,+1) - min_y g_i(y,-1)
// with every minimum taken over a uniform grid on [-b, b] that includes
// both endpoints; psi = min_i psi_i. Requires grid_step <= 1e-3 b.
absl::StatusOr<PsiResult> PsiMetric(const CoordinateFamily& family,
                                    double grid_step);

// 2 a b.
double ConvexPsiClosedForm(double a, double b);
// 2 a b^2 delta^2 (1 + theta)^2 / (1 - theta).
double StronglyConvexPsiClosedForm(double a, double b, double delta,
                                   double theta);

}  // namespace infocon

#endif  // INFOCON_ORACLES_DISCREPANCY_H_
