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

#include "infocon/core/domain.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "absl/strings/str_format.h"

namespace infocon {
namespace {

absl::Status ValidateShape(int dimension, double radius, bool allow_infinite) {
  if (dimension < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("domain dimension must be >= 1, got %d", dimension));
  }
  if (std::isnan(radius) || radius <= 0.0 ||
      (!allow_infinite && std::isinf(radius))) {
    return absl::InvalidArgumentError(
        absl::StrFormat("domain radius must be positive and finite, got %g",
                        radius));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<Domain> Domain::Box(int dimension, double radius) {
  if (absl::Status s = ValidateShape(dimension, radius, false); !s.ok()) {
    return s;
  }
  return Domain(Kind::kBox, dimension, radius);
}

absl::StatusOr<Domain> Domain::L1Ball(int dimension, double radius) {
  if (absl::Status s = ValidateShape(dimension, radius, true); !s.ok()) {
    return s;
  }
  return Domain(Kind::kL1Ball, dimension, radius);
}

absl::StatusOr<Domain> Domain::L2Ball(int dimension, double radius) {
  if (absl::Status s = ValidateShape(dimension, radius, true); !s.ok()) {
    return s;
  }
  return Domain(Kind::kL2Ball, dimension, radius);
}

bool Domain::Contains(const Vector& x, double tol) const {
  if (x.size() != dimension_) return false;
  switch (kind_) {
    case Kind::kBox:
      return LpNorm(x, kInfinityNorm) <= radius_ + tol;
    case Kind::kL1Ball:
      return LpNorm(x, 1.0) <= radius_ + tol;
    case Kind::kL2Ball:
      return LpNorm(x, 2.0) <= radius_ + tol;
  }
  return false;
}

Vector Domain::Project(const Vector& x) const {
  switch (kind_) {
    case Kind::kBox:
      return x.cwiseMax(-radius_).cwiseMin(radius_);
    case Kind::kL1Ball:
      return ProjectOntoL1Ball(x, radius_);
    case Kind::kL2Ball: {
      const double n = LpNorm(x, 2.0);
      if (n <= radius_) return x;
      return x * (radius_ / n);
    }
  }
  return x;
}

std::string Domain::DebugString() const {
  const char* name = kind_ == Kind::kBox      ? "BoxLinf"
                     : kind_ == Kind::kL1Ball ? "L1Ball"
                                              : "L2Ball";
  return absl::StrFormat("%s(d=%d, radius=%g)", name, dimension_, radius_);
}

Vector ProjectOntoL1Ball(const Vector& x, double radius) {
  const Vector mag = x.cwiseAbs();
  if (mag.sum() <= radius) return x;
  std::vector<double> u(mag.data(), mag.data() + mag.size());
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cumulative = 0.0;
  double tau = 0.0;
  for (size_t j = 0; j < u.size(); ++j) {
    cumulative += u[j];
    const double candidate = (cumulative - radius) / static_cast<double>(j + 1);
    if (u[j] > candidate) tau = candidate;
  }
  Vector out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double m = std::max(mag[i] - tau, 0.0);
    out[i] = x[i] < 0.0 ? -m : m;
  }
  return out;
}

}  // namespace infocon
