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

#ifndef INFOCON_CHANNELS_QUANTIZER_H_
#define INFOCON_CHANNELS_QUANTIZER_H_

#include <vector>

#include "absl/status/statusor.h"
#include "infocon/channels/channel.h"
#include "infocon/core/rng.h"
#include "infocon/core/vector.h"

namespace infocon {

// Emits one bit per coordinate in `coords`: +bound with probability
// (g(i) + bound) / (2 bound), otherwise -bound. Costs coords.size() bits.
absl::StatusOr<Message> OneBitQuantize(const Vector& g, double bound,
                                       const std::vector<int>& coords,
                                       RngStream& rng);

}  // namespace infocon

#endif  // INFOCON_CHANNELS_QUANTIZER_H_
