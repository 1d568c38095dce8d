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

#ifndef INFOCON_ANALYSIS_MUTUAL_INFORMATION_H_
#define INFOCON_ANALYSIS_MUTUAL_INFORMATION_H_

#include "Eigen/Dense"
#include "absl/status/statusor.h"
#include "infocon/channels/strategy.h"
#include "infocon/oracles/hard_instances.h"

namespace infocon {

// Exact joint law of V uniform on {-1, 1}^d and a finite observation Y.
//
// Row k is the sign vector with v(i) = +1 iff bit i of k is set; column j
// is the j-th observation symbol. Entries are joint probabilities.
class JointLaw {
 public:
  // Entries must be >= 0 and sum to 1 within 1e-12; rows = 2^dimension.
  static absl::StatusOr<JointLaw> Create(int dimension, Eigen::MatrixXd table);

  int dimension() const { return dimension_; }
  int num_outputs() const { return static_cast<int>(table_.cols()); }
  const Eigen::MatrixXd& table() const { return table_; }

  // I(V(i); Y) in nats as H(Y) - H(Y | V(i)).
  double MutualInformation(int i) const;
  // The same quantity as the average of KL(P_{Y | V(i) = s} || P_Y).
  double MutualInformationKl(int i) const;
  // Sum over i of MutualInformation(i).
  double SumMutualInformation() const;

  // The law of (V, Y') where Y' is drawn from row y of `channel` given Y.
  // `channel` must be row-stochastic with num_outputs() rows.
  absl::StatusOr<JointLaw> PostProcess(const Eigen::MatrixXd& channel) const;

 private:
  JointLaw(int dimension, Eigen::MatrixXd table)
      : dimension_(dimension), table_(std::move(table)) {}

  // P(V(i) = s, Y = y) for s = -1 (row 0) and s = +1 (row 1).
  Eigen::MatrixXd CoordinateMarginal(int i) const;

  int dimension_;
  Eigen::MatrixXd table_;
};

// Joint law of V and the T outputs Y^T of a nonadaptive oblivious strategy
// applied to i.i.d. samples of the P12 instance with sign vector V. Each
// output (j, z) is symbol 2 j + (z > 0); Y^T is indexed in mixed radix
// with step 1 least significant. Requires d <= 3 and T <= 3.
absl::StatusOr<JointLaw> ObliviousJointLaw(const ConvexHardInstance& inst,
                                           const Strategy& strategy);

// Sum over i of I(V(i); Y^T) for the law above, in nats.
absl::StatusOr<double> BruteForceAvgMi(const ConvexHardInstance& inst,
                                       const Strategy& strategy);

// C = (max_i |X_i| - 1) * max over samples x, sign vectors v and i of
// P_{v with i flipped}(X(i) = x(i)) / P_v(X(i) = x(i)), found by
// enumerating the instance's sample law.
absl::StatusOr<double> ObliviousInformationConstant(
    const ConvexHardInstance& inst);

// (C / 2) T gamma^2 with gamma = 4 delta / sqrt(1 - 4 delta^2).
absl::StatusOr<double> ObliviousInformationBound(const ConvexHardInstance& inst,
                                                 int64_t horizon);

}  // namespace infocon

#endif  // INFOCON_ANALYSIS_MUTUAL_INFORMATION_H_
