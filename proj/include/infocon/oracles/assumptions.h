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

#ifndef INFOCON_ORACLES_ASSUMPTIONS_H_
#define INFOCON_ORACLES_ASSUMPTIONS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "infocon/core/rng.h"
#include "infocon/core/vector.h"
#include "infocon/oracles/oracle.h"

namespace infocon {

struct AssumptionReport {
  // Sample mean minus analytic gradient, per coordinate.
  std::vector<double> bias;
  std::vector<double> standard_error;
  double max_norm = 0.0;
  double bound = 0.0;
  bool bias_ok = true;
  bool bound_ok = true;
  // First violation found, empty when both gates pass.
  std::string violation;

  bool ok() const { return bias_ok && bound_ok; }
};

// Draws n >= 10^4 samples at x. Flags a coordinate whose bias exceeds five
// standard errors (or 1e-12 relative when the coordinate is deterministic)
// and any sample whose bound_exponent()-norm exceeds bound() (1 + 1e-9).
absl::StatusOr<AssumptionReport> CheckOracleAssumptions(
    const StochasticOracle& oracle, const Vector& x, int64_t n, RngStream& rng);

}  // namespace infocon

#endif  // INFOCON_ORACLES_ASSUMPTIONS_H_
