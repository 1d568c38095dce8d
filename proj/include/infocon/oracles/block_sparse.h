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

#ifndef INFOCON_ORACLES_BLOCK_SPARSE_H_
#define INFOCON_ORACLES_BLOCK_SPARSE_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "infocon/oracles/oracle.h"

namespace infocon {

// f_v(x) = ||x - v||_2^2 on [-1, 1]^d where v is nonzero on exactly one
// contiguous block {k s, ..., (k+1) s - 1} and every nonzero entry has
// magnitude delta. The oracle draws X in {-1, 1}^d with independent
// coordinates and E[X] = v, and answers 2 (x - X).
class BlockSparseInstance : public StochasticOracle {
 public:
  // `v` must satisfy the block structure for block size `s`; delta = 0
  // (v = 0) is accepted with block index 0.
  static absl::StatusOr<BlockSparseInstance> Create(Vector v, int s);
  // Block `block` carries delta * signs, other coordinates are zero.
  static absl::StatusOr<BlockSparseInstance> FromBlock(int dimension, int s,
                                                       int block, double delta,
                                                       const Vector& signs);
  // Uniform block and uniform signs drawn from `rng`.
  static absl::StatusOr<BlockSparseInstance> Random(int dimension, int s,
                                                    double delta,
                                                    RngStream& rng);

  std::string family() const override { return "block_sparse"; }
  const Domain& domain() const override { return domain_; }
  // ||2 (x - X)||_2 <= 4 sqrt(d) on the box.
  double bound() const override;
  double bound_exponent() const override { return 2.0; }

  absl::Status Sample(const Vector& x, RngStream& rng,
                      Vector* out) const override;
  absl::Status SampleCoordinates(const Vector& x,
                                 const std::vector<int>& coords,
                                 RngStream& rng, Vector* out) const override;
  absl::StatusOr<double> SampleCoordinate(const Vector& x, int i,
                                          RngStream& rng) const override;

  absl::StatusOr<double> Value(const Vector& x) const override;
  absl::StatusOr<Vector> Gradient(const Vector& x) const override;
  Vector Minimizer() const override { return v_; }
  double MinValue() const override { return 0.0; }

  // ||x - v||_2^2 without the domain check; estimates may leave the box.
  double SquaredError(const Vector& x) const { return (x - v_).squaredNorm(); }

  const Vector& v() const { return v_; }
  int block_size() const { return s_; }
  int num_blocks() const { return dimension() / s_; }
  int block_index() const { return block_; }
  double delta() const { return delta_; }

 private:
  BlockSparseInstance(Vector v, int s, int block, double delta, Domain domain)
      : v_(std::move(v)), s_(s), block_(block), delta_(delta), domain_(domain) {}

  Vector v_;
  int s_;
  int block_;
  double delta_;
  Domain domain_;
};

}  // namespace infocon

#endif  // INFOCON_ORACLES_BLOCK_SPARSE_H_
