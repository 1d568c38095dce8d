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

#include "infocon/optimizers/pistar.h"

#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "infocon/channels/channel.h"
#include "infocon/channels/quantizer.h"
#include "infocon/core/mirror_map.h"
#include "infocon/optimizers/mirror_descent.h"
#include "run_util.h"

namespace infocon {

absl::StatusOr<Vector> PermutedOneBitSum(const StochasticOracle& oracle,
                                         const Vector& x, int r, double bound,
                                         const std::vector<int>& sigma,
                                         RngStream& rng, int64_t* bits) {
  const int d = oracle.dimension();
  if (static_cast<int>(sigma.size()) != d || r < 1 || d % r != 0) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "need a permutation of %d coordinates and r dividing it, got %d and %d",
        d, sigma.size(), r));
  }
  Vector g(d);
  Vector qbar = Vector::Zero(d);
  std::vector<int> coords(r);
  for (int i = 0; i < d / r; ++i) {
    for (int k = 0; k < r; ++k) coords[k] = sigma[i * r + k];
    if (absl::Status s = oracle.SampleCoordinates(x, coords, rng, &g);
        !s.ok()) {
      return s;
    }
    absl::StatusOr<Message> msg = OneBitQuantize(g, bound, coords, rng);
    if (!msg.ok()) {
      return absl::FailedPreconditionError(
          absl::StrFormat("query %d: %s", i, msg.status().message()));
    }
    if (absl::Status s = AddDecoded(*msg, 1.0, &qbar); !s.ok()) return s;
    if (bits != nullptr) *bits += msg->bit_cost;
  }
  return qbar;
}

absl::StatusOr<RunResult> PiStarRun(const StochasticOracle& oracle,
                                    const OptConfig& config, RngStream& rng) {
  const int d = oracle.dimension();
  const int r = config.bits_per_query;
  if (absl::Status s = ValidatePiStarShape(d, r, config.horizon); !s.ok()) {
    return s;
  }
  const Domain& domain = config.domain.has_value() ? *config.domain
                                                   : oracle.domain();
  if (domain.kind() != Domain::Kind::kL1Ball || domain.dimension() != d) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "permuted one-bit scheme needs a %d-dimensional l1 ball, got %s", d,
        domain.DebugString()));
  }
  const double bound = config.quantizer_bound;
  if (!(bound > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("quantizer bound must be positive, got %g", bound));
  }
  absl::StatusOr<MirrorMap> map =
      MirrorMap::Create(MirrorMap::ExponentForDimension(d));
  if (!map.ok()) return map.status();

  const int queries_per_phase = d / r;
  const int64_t phases = config.horizon / queries_per_phase;
  OptConfig phase_config = config;
  phase_config.horizon = phases;
  phase_config.output = OutputMode::kAverage;

  RunResult result;
  internal::OutputTracker tracker(phase_config, d);
  RngStream public_rng = rng.Substream(kPublicRandomnessStream);
  Vector x = Vector::Zero(d);
  for (int64_t t = 1; t <= phases; ++t) {
    tracker.Observe(t, x, &result);
    const std::vector<int> sigma = public_rng.Permutation(d);
    absl::StatusOr<Vector> qbar = PermutedOneBitSum(
        oracle, x, r, bound, sigma, rng, &result.total_bits);
    if (!qbar.ok()) {
      return absl::Status(qbar.status().code(),
                          absl::StrFormat("phase %d: %s", t,
                                          qbar.status().message()));
    }
    result.queries_used += queries_per_phase;
    absl::StatusOr<Vector> next = MirrorDescentStep(
        x, *qbar, config.schedule.At(t), *map, domain.radius());
    if (!next.ok()) return next.status();
    x = *std::move(next);
  }
  result.output = tracker.Current(x);
  return result;
}

}  // namespace infocon
