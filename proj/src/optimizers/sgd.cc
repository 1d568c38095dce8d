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

#include "infocon/optimizers/sgd.h"

#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "run_util.h"

namespace infocon {

absl::StatusOr<RunResult> SgdRun(const StochasticOracle& oracle,
                                 const Strategy& strategy,
                                 const OptConfig& config, RngStream& rng) {
  const int d = oracle.dimension();
  if (config.horizon < 1) {
    return absl::InvalidArgumentError("horizon must be at least 1");
  }
  if (strategy.horizon() < config.horizon) {
    return absl::InvalidArgumentError(
        absl::StrFormat("strategy covers %d steps, run needs %d",
                        strategy.horizon(), config.horizon));
  }
  const Domain& domain = config.domain.has_value() ? *config.domain
                                                   : oracle.domain();
  if (domain.dimension() != d) {
    return absl::InvalidArgumentError("domain dimension mismatch");
  }

  RunResult result;
  internal::OutputTracker tracker(config, d);
  MessageHistory history;
  Vector x = Vector::Zero(d);
  Vector g(d);
  Vector ghat(d);
  for (int64_t t = 1; t <= config.horizon; ++t) {
    if (absl::Status s = oracle.Sample(x, rng, &g); !s.ok()) return s;
    absl::StatusOr<ChannelSpec> spec = strategy.Next(history, t, rng);
    if (!spec.ok()) return spec.status();
    if (spec->dimension() != d) {
      return absl::InvalidArgumentError(
          absl::StrFormat("step %d: channel dimension %d, oracle %d", t,
                          spec->dimension(), d));
    }
    absl::StatusOr<Message> msg = ApplyChannel(*spec, g, rng);
    if (!msg.ok()) return msg.status();
    ghat.setZero();
    if (absl::Status s = AddDecoded(*msg, 1.0, &ghat); !s.ok()) {
      return absl::FailedPreconditionError(
          absl::StrFormat("step %d: %s", t, s.message()));
    }
    result.total_bits += msg->bit_cost;
    ++result.queries_used;
    if (strategy.adaptive()) history.push_back(*std::move(msg));
    x = domain.Project(x - config.schedule.At(t) * ghat);
    tracker.Observe(t, x, &result);
  }
  result.output = tracker.Current(x);
  return result;
}

}  // namespace infocon
