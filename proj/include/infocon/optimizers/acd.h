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

#ifndef INFOCON_OPTIMIZERS_ACD_H_
#define INFOCON_OPTIMIZERS_ACD_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "infocon/channels/strategy.h"
#include "infocon/core/rng.h"
#include "infocon/optimizers/config.h"
#include "infocon/oracles/block_sparse.h"

namespace infocon {

// Two-phase adaptive coordinate scheme for block-sparse means.
//
// All queries are at x = 0, so each revealed coordinate gives
// X(i) = -ghat(i) / 2. Exploration spends T s / (2 d) queries on the first
// coordinate of every block and sums them; the block with the largest
// absolute sum (lowest index on ties) is selected. Exploitation spends
// T / (2 s) queries on each coordinate of that block and outputs the
// rescaled sums there and zero elsewhere. Every query goes through a
// point-mass oblivious channel.
absl::StatusOr<RunResult> AcdRun(const BlockSparseInstance& inst, int64_t horizon,
                                 RngStream& rng);

// The same schedule as an adaptive rule over message histories. The rule
// reads the exploration messages to choose the exploitation coordinates.
absl::StatusOr<AdaptiveRule> AcdSelectionRule(int dimension, int s,
                                              int64_t horizon);

// Nonadaptive baseline: coordinate (t - 1) mod d at step t, so each
// coordinate is queried T / d times. Per-coordinate means are formed, the
// block with the largest sum of squared means is kept, and the means on
// that block are returned.
absl::StatusOr<RunResult> NonadaptiveBlockSparseRun(
    const BlockSparseInstance& inst, int64_t horizon, RngStream& rng);

// (36 d ln(d / s) + 2 s^2) / T.
double AcdErrorBound(int dimension, int s, int64_t horizon);

}  // namespace infocon

#endif  // INFOCON_OPTIMIZERS_ACD_H_
