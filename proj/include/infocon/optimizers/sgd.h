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

#ifndef INFOCON_OPTIMIZERS_SGD_H_
#define INFOCON_OPTIMIZERS_SGD_H_

#include "absl/status/statusor.h"
#include "infocon/channels/strategy.h"
#include "infocon/core/rng.h"
#include "infocon/optimizers/config.h"
#include "infocon/oracles/oracle.h"

namespace infocon {

// Projected stochastic gradient descent through a channel strategy.
//
// Starting from x_1 = 0, step t samples the oracle at x_t, passes the
// sample through the strategy's channel for step t, decodes, and sets
// x_{t+1} = Proj(x_t - eta_t ghat_t). The output averages x_2 .. x_{T+1} or
// returns x_{T+1}. Adaptive strategies see the full message history.
absl::StatusOr<RunResult> SgdRun(const StochasticOracle& oracle,
                                 const Strategy& strategy,
                                 const OptConfig& config, RngStream& rng);

}  // namespace infocon

#endif  // INFOCON_OPTIMIZERS_SGD_H_
