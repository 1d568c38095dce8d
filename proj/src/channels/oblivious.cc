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

#include "infocon/channels/oblivious.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_format.h"

namespace infocon {

absl::Status ValidateProbabilities(const std::vector<double>& probs) {
  if (probs.empty()) {
    return absl::InvalidArgumentError("probability vector is empty");
  }
  double sum = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    if (!std::isfinite(probs[i]) || probs[i] < 0.0) {
      return absl::InvalidArgumentError(
          absl::StrFormat("probability %d is %g", i, probs[i]));
    }
    sum += probs[i];
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    return absl::InvalidArgumentError(
        absl::StrFormat("probabilities sum to %.17g, not 1", sum));
  }
  return absl::OkStatus();
}

int SampleIndex(const Oblivious& channel, RngStream& rng) {
  if (channel.point_mass >= 0) return channel.point_mass;
  const std::vector<double>& cdf = *channel.cdf;
  const double u = rng.Uniform() * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  int i = static_cast<int>(it - cdf.begin());
  if (i >= static_cast<int>(cdf.size())) i = static_cast<int>(cdf.size()) - 1;
  // Rounding can land on a zero-probability entry; step back to the support.
  while (channel.probs[i] == 0.0 && i > 0) --i;
  return i;
}

absl::StatusOr<Message> ObliviousSample(const Vector& g,
                                        const std::vector<double>& probs,
                                        RngStream& rng) {
  absl::StatusOr<ChannelSpec> spec =
      ChannelSpec::Obliv(static_cast<int>(g.size()), probs);
  if (!spec.ok()) return spec.status();
  return ApplyChannel(*spec, g, rng);
}

}  // namespace infocon
