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

#ifndef INFOCON_CORE_MIRROR_MAP_H_
#define INFOCON_CORE_MIRROR_MAP_H_

#include "absl/status/statusor.h"
#include "infocon/core/vector.h"

namespace infocon {

// The potential Phi_a(x) = ||x||_a^2 / (a - 1) for 1 < a <= 2, together with
// its gradient, the gradient of its convex conjugate, and Bregman divergence.
class MirrorMap {
 public:
  static absl::StatusOr<MirrorMap> Create(double a);

  // a = 2 log2(d) / (2 log2(d) - 1), clamped to 2 for d <= 2.
  static double ExponentForDimension(int dimension);

  double a() const { return a_; }
  // Conjugate exponent a / (a - 1).
  double b() const { return b_; }

  double Potential(const Vector& x) const;
  // Gradient of Phi_a; zero at the origin.
  Vector Grad(const Vector& x) const;
  // Inverse of Grad, i.e. the gradient of (a - 1)/4 * ||theta||_b^2.
  Vector GradInverse(const Vector& theta) const;
  double Bregman(const Vector& x, const Vector& y) const;

 private:
  explicit MirrorMap(double a) : a_(a), b_(a / (a - 1.0)) {}

  double a_;
  double b_;
};

absl::StatusOr<Vector> MirrorGrad(const Vector& x, double a);
absl::StatusOr<Vector> MirrorGradInverse(const Vector& theta, double a);
absl::StatusOr<double> Bregman(const Vector& x, const Vector& y, double a);

}  // namespace infocon

#endif  // INFOCON_CORE_MIRROR_MAP_H_
