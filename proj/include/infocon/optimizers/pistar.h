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

#ifndef INFOCON_OPTIMIZERS_PISTAR_H_
#define INFOCON_OPTIMIZERS_PISTAR_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "infocon/core/rng.h"
#include "infocon/optimizers/config.h"
#include "infocon/oracles/oracle.h"

namespace infocon {

// Communication-constrained mirror descent with r one-bit messages per
// query.
//
// The horizon is split into T r / d phases of d / r queries, all made at
// the phase point x_t. A fresh public permutation sigma_t of the
// coordinates is drawn per phase; query i one-bit quantizes coordinates
// sigma_t(i r) .. sigma_t(i r + r - 1) of its oracle sample at scale B, so
// the decoded bits tile all d coordinates once per phase. Their sum drives
// one mirror descent step with a = 2 log2 d / (2 log2 d - 1) on the l1 ball
// given by config.domain. The output is the average of the phase points.
absl::StatusOr<RunResult> PiStarRun(const StochasticOracle& oracle,
                                    const OptConfig& config, RngStream& rng);

// One phase of queries at x: d / r oracle samples, query i one-bit
// quantizing coordinates sigma[i r .. i r + r - 1] at scale `bound`. Returns
// the decoded sum Qbar and adds the bits spent to `*bits`.
absl::StatusOr<Vector> PermutedOneBitSum(const StochasticOracle& oracle,
                                         const Vector& x, int r, double bound,
                                         const std::vector<int>& sigma,
                                         RngStream& rng, int64_t* bits);

// Substream index reserved for the public permutations.
inline constexpr uint64_t kPublicRandomnessStream = 0x7075626c6963ull;

}  // namespace infocon

#endif  // INFOCON_OPTIMIZERS_PISTAR_H_
