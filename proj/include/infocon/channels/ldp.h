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

#ifndef INFOCON_CHANNELS_LDP_H_
#define INFOCON_CHANNELS_LDP_H_

#include "absl/status/statusor.h"
#include "infocon/channels/channel.h"
#include "infocon/core/rng.h"
#include "infocon/core/vector.h"

namespace infocon {

// e^eps / (1 + e^eps), computed without overflow for large eps.
double RrKeepProbability(double eps);

// (e^eps + 1) / (e^eps - 1); infinite at eps = 0.
double LdpUnbiasFactor(double eps);

// Binary randomized response on bit in {-1, +1}.
int LdpRrBit(int bit, double eps, RngStream& rng);

// Uniform coordinate j, stochastic sign rounding of g(j)/scale, then
// randomized response on the sign. Requires ||g||_inf <= scale and eps >= 0.
absl::StatusOr<Message> LdpVectorMechanism(const Vector& g, double eps,
                                           double scale, RngStream& rng);

}  // namespace infocon

#endif  // INFOCON_CHANNELS_LDP_H_
