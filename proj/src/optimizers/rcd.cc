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

#include "infocon/optimizers/rcd.h"

#include <algorithm>

#include "absl/status/status.h"
#include "infocon/channels/channel.h"
#include "infocon/channels/oblivious.h"
#include "run_util.h"

namespace infocon {

absl::StatusOr<RunResult> RcdRun(const StochasticOracle& oracle,
                                 const OptConfig& config, RngStream& rng) {
  const int d = oracle.dimension();
  if (config.horizon < 1) {
    return absl::InvalidArgumentError("horizon must be at least 1");
  }
  const Domain& domain = config.domain.has_value() ? *config.domain
                                                   : oracle.domain();
  if (domain.dimension() != d) {
    return absl::InvalidArgumentError("domain dimension mismatch");
  }
  absl::StatusOr<ChannelSpec> spec = ChannelSpec::UniformOblivious(d);
  if (!spec.ok()) return spec.status();
  const Oblivious& channel = std::get<Oblivious>(spec->kind());
  const int64_t bits = IndexBits(d) + 64;
  const bool box = domain.kind() == Domain::Kind::kBox;
  const double r = domain.radius();

  RunResult result;
  internal::OutputTracker tracker(config, d);
  Vector x = Vector::Zero(d);
  for (int64_t t = 1; t <= config.horizon; ++t) {
    const int i = SampleIndex(channel, rng);
    absl::StatusOr<double> gi = oracle.SampleCoordinate(x, i, rng);
    if (!gi.ok()) return gi.status();
    const double step = config.schedule.At(t) * d * *gi;
    if (box) {
      x(i) = std::clamp(x(i) - step, -r, r);
    } else {
      x(i) -= step;
      x = domain.Project(x);
    }
    result.total_bits += bits;
    ++result.queries_used;
    tracker.Observe(t, x, &result);
  }
  result.output = tracker.Current(x);
  return result;
}

}  // namespace infocon
