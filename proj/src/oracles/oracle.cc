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

#include "infocon/oracles/oracle.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_format.h"

namespace infocon {

absl::Status StochasticOracle::SampleCoordinates(
    const Vector& x, const std::vector<int>& coords, RngStream& rng,
    Vector* out) const {
  (void)coords;
  return Sample(x, rng, out);
}

absl::StatusOr<double> StochasticOracle::SampleCoordinate(
    const Vector& x, int i, RngStream& rng) const {
  Vector out;
  if (absl::Status s = Sample(x, rng, &out); !s.ok()) return s;
  return out[i];
}

absl::StatusOr<double> StochasticOracle::Gap(const Vector& x) const {
  absl::StatusOr<double> value = Value(x);
  if (!value.ok()) return value.status();
  return std::max(0.0, *value - MinValue());
}

absl::Status StochasticOracle::CheckInDomain(const Vector& x) const {
  const Domain& dom = domain();
  if (x.size() != dom.dimension()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "query has dimension %d, expected %d", x.size(), dom.dimension()));
  }
  const double slack =
      std::isfinite(dom.radius()) ? 1e-9 * dom.radius() : 0.0;
  if (!dom.Contains(x, slack)) {
    return absl::OutOfRangeError(
        absl::StrFormat("query lies outside %s", dom.DebugString()));
  }
  return absl::OkStatus();
}

}  // namespace infocon
