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

#ifndef INFOCON_CORE_VECTOR_H_
#define INFOCON_CORE_VECTOR_H_

#include <limits>

#include "Eigen/Core"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/types/span.h"

namespace infocon {

// A point, subgradient or estimate in R^d.
using Vector = Eigen::VectorXd;

// Sentinel exponent selecting the max-norm.
inline constexpr double kInfinityNorm = std::numeric_limits<double>::infinity();

// Builds a vector from `values`, rejecting empty input and NaN/Inf entries.
absl::StatusOr<Vector> MakeVector(absl::Span<const double> values);

// Returns OK iff every entry of `x` is finite and x is nonempty.
absl::Status CheckFinite(const Vector& x);

// The l_p norm for p >= 1, or the max-norm when p == kInfinityNorm.
absl::StatusOr<double> Norm(const Vector& x, double p);

// Same as Norm() without argument checking; p must be >= 1 or the sentinel.
// Scales by the max entry so large exponents neither overflow nor underflow.
double LpNorm(const Vector& x, double p);

// base^exponent for base >= 0, by repeated squaring when the exponent is a
// small nonnegative integer.
double PowNonneg(double base, double exponent);

// Holder conjugate p/(p-1); maps 1 to the sentinel and the sentinel to 1.
double HolderConjugate(double p);

// d^(1/p), with d^(1/inf) = 1.
double DimensionRoot(int dimension, double p);

}  // namespace infocon

#endif  // INFOCON_CORE_VECTOR_H_
