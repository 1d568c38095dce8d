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

#ifndef INFOCON_OPTIMIZERS_MIRROR_DESCENT_H_
#define INFOCON_OPTIMIZERS_MIRROR_DESCENT_H_

#include "absl/status/statusor.h"
#include "infocon/core/domain.h"
#include "infocon/core/mirror_map.h"
#include "infocon/core/vector.h"

namespace infocon {

struct MirrorStepInfo {
  bool projected = false;
  int iterations = 0;
};

// argmin over ||x||_1 <= radius of eta <g, x> + D_Phi(x, x_t).
//
// The unconstrained minimizer is y = grad Phi*(grad Phi(x_t) - eta g). If y
// is infeasible the constrained minimizer is grad Phi*(S_lambda(theta)),
// where S_lambda soft-thresholds at the multiplier lambda; its l1 norm
// falls monotonically in lambda, and lambda is found by a safeguarded
// false-position search until the norm is within 1e-8 of the radius from
// below. radius may be +inf.
absl::StatusOr<Vector> MirrorDescentStep(const Vector& x, const Vector& g,
                                         double eta, const MirrorMap& map,
                                         double radius,
                                         MirrorStepInfo* info = nullptr);

// As above with the exponent and an L1Ball domain given explicitly.
absl::StatusOr<Vector> MirrorDescentStep(const Vector& x, const Vector& g,
                                         double eta, double a,
                                         const Domain& domain);

}  // namespace infocon

#endif  // INFOCON_OPTIMIZERS_MIRROR_DESCENT_H_
