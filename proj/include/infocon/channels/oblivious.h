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

#ifndef INFOCON_CHANNELS_OBLIVIOUS_H_
#define INFOCON_CHANNELS_OBLIVIOUS_H_

#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "infocon/channels/channel.h"
#include "infocon/core/rng.h"
#include "infocon/core/vector.h"

namespace infocon {

// OK iff `probs` is nonnegative, finite and sums to one within 1e-12.
absl::Status ValidateProbabilities(const std::vector<double>& probs);

// Index drawn by inverse CDF. A point mass consumes no randomness.
int SampleIndex(const Oblivious& channel, RngStream& rng);

// Releases (i, g(i)) with probability probs[i].
absl::StatusOr<Message> ObliviousSample(const Vector& g,
                                        const std::vector<double>& probs,
                                        RngStream& rng);

}  // namespace infocon

#endif  // INFOCON_CHANNELS_OBLIVIOUS_H_
