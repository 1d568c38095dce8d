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

#ifndef INFOCON_ORACLES_QUADRATIC_H_
#define INFOCON_ORACLES_QUADRATIC_H_

#include <string>

#include "absl/status/statusor.h"
#include "infocon/oracles/oracle.h"

namespace infocon {

// f(x) = ||x - c||_2^2 on a domain. Samples are 2 (x - c) plus independent
// uniform noise on [-noise, noise] per coordinate; noise = 0 gives exact
// gradients. Used to smoke-test optimizers.
class QuadraticOracle : public StochasticOracle {
 public:
  static absl::StatusOr<QuadraticOracle> Create(Vector center, Domain domain,
                                                double noise);

  std::string family() const override { return "quadratic"; }
  const Domain& domain() const override { return domain_; }
  // Largest ||sample||_2 over the domain when the domain is bounded.
  double bound() const override;
  double bound_exponent() const override { return 2.0; }

  absl::Status Sample(const Vector& x, RngStream& rng,
                      Vector* out) const override;
  absl::StatusOr<double> Value(const Vector& x) const override;
  absl::StatusOr<Vector> Gradient(const Vector& x) const override;
  // The projection of the center onto the domain.
  Vector Minimizer() const override { return domain_.Project(center_); }
  double MinValue() const override;

 private:
  QuadraticOracle(Vector center, Domain domain, double noise)
      : center_(std::move(center)), domain_(domain), noise_(noise) {}

  Vector center_;
  Domain domain_;
  double noise_;
};

}  // namespace infocon

#endif  // INFOCON_ORACLES_QUADRATIC_H_
