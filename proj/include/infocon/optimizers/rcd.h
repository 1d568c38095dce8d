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

#ifndef INFOCON_OPTIMIZERS_RCD_H_
#define INFOCON_OPTIMIZERS_RCD_H_

#include "absl/status/statusor.h"
#include "infocon/core/rng.h"
#include "infocon/optimizers/config.h"
#include "infocon/oracles/oracle.h"

namespace infocon {

// Randomized coordinate descent: SgdRun with the uniform oblivious channel.
// Each step reveals one uniformly drawn coordinate i of the oracle sample
// and uses the estimate d g(i) e_i. Only coordinate i of the sample is
// drawn, which has the same law as drawing the full sample and discarding
// the rest.
absl::StatusOr<RunResult> RcdRun(const StochasticOracle& oracle,
                                 const OptConfig& config, RngStream& rng);

}  // namespace infocon

#endif  // INFOCON_OPTIMIZERS_RCD_H_
