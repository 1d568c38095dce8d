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

#include "infocon/oracles/quadratic.h"

#include <cmath>

namespace infocon {

absl::StatusOr<QuadraticOracle> QuadraticOracle::Create(Vector center,
                                                        Domain domain,
                                                        double noise) {
  if (absl::Status s = CheckFinite(center); !s.ok()) return s;
  if (center.size() != domain.dimension()) {
    return absl::InvalidArgumentError("center and domain differ in dimension");
  }
  if (!(noise >= 0.0) || std::isinf(noise)) {
    return absl::InvalidArgumentError("noise must be finite and >= 0");
  }
  return QuadraticOracle(std::move(center), domain, noise);
}

double QuadraticOracle::bound() const {
  const double d = domain_.dimension();
  double radius_l2 = domain_.radius();
  if (domain_.kind() == Domain::Kind::kBox) radius_l2 *= std::sqrt(d);
  return 2.0 * (radius_l2 + center_.norm()) + noise_ * std::sqrt(d);
}

absl::Status QuadraticOracle::Sample(const Vector& x, RngStream& rng,
                                     Vector* out) const {
  if (x.size() != dimension()) {
    return absl::InvalidArgumentError("query dimension mismatch");
  }
  *out = 2.0 * (x - center_);
  if (noise_ > 0.0) {
    for (Eigen::Index i = 0; i < out->size(); ++i) {
      (*out)[i] += noise_ * (2.0 * rng.Uniform() - 1.0);
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<double> QuadraticOracle::Value(const Vector& x) const {
  if (absl::Status s = CheckInDomain(x); !s.ok()) return s;
  return (x - center_).squaredNorm();
}

absl::StatusOr<Vector> QuadraticOracle::Gradient(const Vector& x) const {
  if (absl::Status s = CheckInDomain(x); !s.ok()) return s;
  return Vector(2.0 * (x - center_));
}

double QuadraticOracle::MinValue() const {
  return (Minimizer() - center_).squaredNorm();
}

}  // namespace infocon
