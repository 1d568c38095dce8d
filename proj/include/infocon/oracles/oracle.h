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

#ifndef INFOCON_ORACLES_ORACLE_H_
#define INFOCON_ORACLES_ORACLE_H_

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "infocon/core/domain.h"
#include "infocon/core/rng.h"
#include "infocon/core/vector.h"

namespace infocon {

// A convex function on a domain paired with a stochastic first-order oracle
// whose samples are unbiased subgradients bounded by bound() in the
// bound_exponent() norm.
class StochasticOracle {
 public:
  virtual ~StochasticOracle() = default;

  virtual std::string family() const = 0;
  virtual const Domain& domain() const = 0;
  int dimension() const { return domain().dimension(); }

  // Gradient bound B and the norm exponent q it applies in.
  virtual double bound() const = 0;
  virtual double bound_exponent() const = 0;

  // Writes one oracle answer at `x` into `*out` (resized as needed).
  virtual absl::Status Sample(const Vector& x, RngStream& rng,
                              Vector* out) const = 0;

  // Fills out[i] for i in `coords` with values whose joint law equals that
  // of the same coordinates of a full Sample(). Other entries are
  // unspecified. Product-form oracles override this to draw only what is
  // needed; with coords = {0..d-1} the draws match Sample() exactly.
  virtual absl::Status SampleCoordinates(const Vector& x,
                                         const std::vector<int>& coords,
                                         RngStream& rng, Vector* out) const;
  // Single-coordinate form of SampleCoordinates().
  virtual absl::StatusOr<double> SampleCoordinate(const Vector& x, int i,
                                                  RngStream& rng) const;

  virtual absl::StatusOr<double> Value(const Vector& x) const = 0;
  // The subgradient the oracle is unbiased for.
  virtual absl::StatusOr<Vector> Gradient(const Vector& x) const = 0;
  virtual Vector Minimizer() const = 0;
  virtual double MinValue() const = 0;

  // f(x) - min f, clamped at zero against rounding.
  absl::StatusOr<double> Gap(const Vector& x) const;

 protected:
  // OK iff x has the right dimension and lies in the domain up to a
  // relative slack of 1e-9.
  absl::Status CheckInDomain(const Vector& x) const;
};

}  // namespace infocon

#endif  // INFOCON_ORACLES_ORACLE_H_
