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

#include "infocon/core/mirror_map.h"

#include <cmath>

#include "absl/strings/str_cat.h"

namespace infocon {
namespace {

// Returns scale * sign(v) * (|v| / n)^power with n = ||v||_p.
Vector SignedPower(const Vector& v, double p, double power, double scale) {
  const double n = LpNorm(v, p);
  Vector out = Vector::Zero(v.size());
  if (n == 0.0) return out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] == 0.0) continue;
    const double m = scale * n * PowNonneg(std::abs(v[i]) / n, power);
    out[i] = v[i] < 0.0 ? -m : m;
  }
  return out;
}

}  // namespace

absl::StatusOr<MirrorMap> MirrorMap::Create(double a) {
  if (!(a > 1.0 && a <= 2.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("mirror exponent must lie in (1, 2], got ", a));
  }
  return MirrorMap(a);
}

double MirrorMap::ExponentForDimension(int dimension) {
  const double l = std::log2(static_cast<double>(dimension));
  if (l <= 1.0) return 2.0;
  return 2.0 * l / (2.0 * l - 1.0);
}

double MirrorMap::Potential(const Vector& x) const {
  const double n = LpNorm(x, a_);
  return n * n / (a_ - 1.0);
}

Vector MirrorMap::Grad(const Vector& x) const {
  return SignedPower(x, a_, a_ - 1.0, 2.0 / (a_ - 1.0));
}

Vector MirrorMap::GradInverse(const Vector& theta) const {
  return SignedPower(theta, b_, b_ - 1.0, (a_ - 1.0) / 2.0);
}

double MirrorMap::Bregman(const Vector& x, const Vector& y) const {
  return Potential(x) - Potential(y) - Grad(y).dot(x - y);
}

absl::StatusOr<Vector> MirrorGrad(const Vector& x, double a) {
  absl::StatusOr<MirrorMap> map = MirrorMap::Create(a);
  if (!map.ok()) return map.status();
  return map->Grad(x);
}

absl::StatusOr<Vector> MirrorGradInverse(const Vector& theta, double a) {
  absl::StatusOr<MirrorMap> map = MirrorMap::Create(a);
  if (!map.ok()) return map.status();
  return map->GradInverse(theta);
}

absl::StatusOr<double> Bregman(const Vector& x, const Vector& y, double a) {
  absl::StatusOr<MirrorMap> map = MirrorMap::Create(a);
  if (!map.ok()) return map.status();
  if (x.size() != y.size()) {
    return absl::InvalidArgumentError("Bregman arguments differ in dimension");
  }
  return map->Bregman(x, y);
}

}  // namespace infocon
