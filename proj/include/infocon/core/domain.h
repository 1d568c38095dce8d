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

#ifndef INFOCON_CORE_DOMAIN_H_
#define INFOCON_CORE_DOMAIN_H_

#include <string>

#include "absl/status/statusor.h"
#include "infocon/core/vector.h"

namespace infocon {

// A closed convex feasible set centred at the origin.
//
// Box(d, b) is {x : ||x||_inf <= b}; L1Ball and L2Ball are the norm balls of
// the given radius. The L2 radius may be +inf, which denotes all of R^d.
class Domain {
 public:
  enum class Kind { kBox, kL1Ball, kL2Ball };

  static absl::StatusOr<Domain> Box(int dimension, double radius);
  static absl::StatusOr<Domain> L1Ball(int dimension, double radius);
  static absl::StatusOr<Domain> L2Ball(int dimension, double radius);

  Kind kind() const { return kind_; }
  int dimension() const { return dimension_; }
  double radius() const { return radius_; }

  // Membership with absolute slack `tol` on the defining norm.
  bool Contains(const Vector& x, double tol = 1e-9) const;

  // Euclidean projection. `x` must have the domain's dimension.
  Vector Project(const Vector& x) const;

  std::string DebugString() const;

 private:
  Domain(Kind kind, int dimension, double radius)
      : kind_(kind), dimension_(dimension), radius_(radius) {}

  Kind kind_;
  int dimension_;
  double radius_;
};

// Euclidean projection of `x` onto {y : ||y||_1 <= radius} by sorting the
// magnitudes and soft-thresholding at the unique feasible level.
Vector ProjectOntoL1Ball(const Vector& x, double radius);

}  // namespace infocon

#endif  // INFOCON_CORE_DOMAIN_H_
