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

#ifndef INFOCON_CHANNELS_LDP_VERIFIER_H_
#define INFOCON_CHANNELS_LDP_VERIFIER_H_

#include <string>
#include <vector>

#include "Eigen/Core"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "infocon/core/vector.h"

namespace infocon {

// Rows index inputs, columns index outputs; each row is a distribution.
using ChannelMatrix = Eigen::MatrixXd;

// Largest ln(W(y|x) / W(y|x')) over outputs y and input pairs. Ratios 0/0
// count as 1 and c/0 with c > 0 as +inf. The channel is eps-LDP iff the
// result is <= eps. Rejects rows that are negative or do not sum to 1.
absl::StatusOr<double> VerifyLdp(const ChannelMatrix& channel);

// Row-stochastic check with absolute tolerance `tol` on each row sum.
absl::Status CheckRowStochastic(const ChannelMatrix& channel,
                                double tol = 1e-9);

// The 2x2 randomized response matrix for inputs/outputs (+1, -1).
ChannelMatrix RandomizedResponseMatrix(double eps);

// Exact transition matrix of LdpVectorMechanism restricted to `inputs`.
// Output column 2j is (coordinate j, bit +1) and 2j+1 is (j, bit -1).
absl::StatusOr<ChannelMatrix> LdpVectorMechanismMatrix(
    const std::vector<Vector>& inputs, double eps, double scale);

// Parses comma-separated rows; blank lines and lines starting with '#' are
// skipped.
absl::StatusOr<ChannelMatrix> ParseChannelMatrixCsv(absl::string_view text);
absl::StatusOr<ChannelMatrix> LoadChannelMatrixCsv(const std::string& path);

}  // namespace infocon

#endif  // INFOCON_CHANNELS_LDP_VERIFIER_H_
