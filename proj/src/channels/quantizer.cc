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

#include "infocon/channels/quantizer.h"

#include <cmath>

#include "absl/strings/str_format.h"

namespace infocon {

absl::StatusOr<Message> OneBitQuantize(const Vector& g, double bound,
                                       const std::vector<int>& coords,
                                       RngStream& rng) {
  if (!(bound > 0.0) || std::isinf(bound)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("quantizer bound must be positive, got %g", bound));
  }
  QuantizedPayload payload;
  payload.coords = coords;
  payload.bits.reserve(coords.size());
  payload.bound = bound;
  for (int i : coords) {
    if (i < 0 || i >= g.size()) {
      return absl::InvalidArgumentError(
          absl::StrFormat("coordinate %d outside [0, %d)", i, g.size()));
    }
    if (!(std::abs(g[i]) <= bound)) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "|g(%d)| = %.17g exceeds quantizer bound %.17g", i, std::abs(g[i]),
          bound));
    }
    const double p_plus = (g[i] + bound) / (2.0 * bound);
    payload.bits.push_back(rng.Bernoulli(p_plus) ? 1 : 0);
  }
  Message m;
  m.dimension = static_cast<int>(g.size());
  m.bit_cost = static_cast<int64_t>(coords.size());
  m.payload = std::move(payload);
  return m;
}

}  // namespace infocon
