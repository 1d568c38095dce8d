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

#include "infocon/channels/ldp.h"

#include <cmath>
#include <limits>

#include "absl/strings/str_format.h"

namespace infocon {

double RrKeepProbability(double eps) { return 1.0 / (1.0 + std::exp(-eps)); }

double LdpUnbiasFactor(double eps) {
  if (eps == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / std::tanh(eps / 2.0);
}

int LdpRrBit(int bit, double eps, RngStream& rng) {
  return rng.Bernoulli(RrKeepProbability(eps)) ? bit : -bit;
}

absl::StatusOr<Message> LdpVectorMechanism(const Vector& g, double eps,
                                           double scale, RngStream& rng) {
  if (std::isnan(eps) || eps < 0.0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("eps must be >= 0, got %g", eps));
  }
  if (!(scale > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("LDP scale must be positive, got %g", scale));
  }
  const double sup = LpNorm(g, kInfinityNorm);
  if (!(sup <= scale)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "||g||_inf = %.17g exceeds LDP scale %.17g", sup, scale));
  }
  const int d = static_cast<int>(g.size());
  const int j = static_cast<int>(rng.UniformInt(d));
  const int sign = rng.Bernoulli((g[j] / scale + 1.0) / 2.0) ? 1 : -1;
  Message m;
  m.dimension = d;
  m.payload = LdpPayload{j, LdpRrBit(sign, eps, rng), eps, scale};
  m.bit_cost = IndexBits(d) + 1;
  return m;
}

}  // namespace infocon
