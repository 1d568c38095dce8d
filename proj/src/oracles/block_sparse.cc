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

#include "infocon/oracles/block_sparse.h"

#include <cmath>

#include "absl/strings/str_format.h"

namespace infocon {

absl::StatusOr<BlockSparseInstance> BlockSparseInstance::Create(Vector v,
                                                                int s) {
  const int d = static_cast<int>(v.size());
  if (d < 1 || s < 1 || d % s != 0) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "block size %d must divide dimension %d", s, d));
  }
  int block = -1;
  double delta = 0.0;
  for (int i = 0; i < d; ++i) {
    if (!std::isfinite(v[i]) || std::abs(v[i]) > 1.0) {
      return absl::InvalidArgumentError(
          absl::StrFormat("|v(%d)| = %g exceeds 1", i, std::abs(v[i])));
    }
    if (v[i] == 0.0) continue;
    if (block < 0) {
      block = i / s;
      delta = std::abs(v[i]);
    }
    if (i / s != block) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "v has nonzero entries in blocks %d and %d", block, i / s));
    }
    if (std::abs(v[i]) != delta) {
      return absl::InvalidArgumentError(
          "nonzero entries of v differ in magnitude");
    }
  }
  if (block >= 0) {
    for (int i = block * s; i < (block + 1) * s; ++i) {
      if (v[i] == 0.0) {
        return absl::InvalidArgumentError(
            absl::StrFormat("block %d has a zero entry at %d", block, i));
      }
    }
  }
  absl::StatusOr<Domain> box = Domain::Box(d, 1.0);
  if (!box.ok()) return box.status();
  return BlockSparseInstance(std::move(v), s, std::max(block, 0), delta, *box);
}

absl::StatusOr<BlockSparseInstance> BlockSparseInstance::FromBlock(
    int dimension, int s, int block, double delta, const Vector& signs) {
  if (s < 1 || dimension < 1 || dimension % s != 0) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "block size %d must divide dimension %d", s, dimension));
  }
  if (block < 0 || block >= dimension / s) {
    return absl::InvalidArgumentError(
        absl::StrFormat("block index %d outside [0, %d)", block, dimension / s));
  }
  if (signs.size() != s) {
    return absl::InvalidArgumentError("need one sign per block coordinate");
  }
  if (!(delta > 0.0 && delta <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("delta = %g outside (0, 1]", delta));
  }
  Vector v = Vector::Zero(dimension);
  for (int k = 0; k < s; ++k) {
    if (signs[k] != 1.0 && signs[k] != -1.0) {
      return absl::InvalidArgumentError("block signs must be +1 or -1");
    }
    v[block * s + k] = delta * signs[k];
  }
  return Create(std::move(v), s);
}

absl::StatusOr<BlockSparseInstance> BlockSparseInstance::Random(
    int dimension, int s, double delta, RngStream& rng) {
  if (s < 1 || dimension < 1 || dimension % s != 0) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "block size %d must divide dimension %d", s, dimension));
  }
  const int block = static_cast<int>(rng.UniformInt(dimension / s));
  Vector signs(s);
  for (int k = 0; k < s; ++k) signs[k] = rng.Bernoulli(0.5) ? 1.0 : -1.0;
  return FromBlock(dimension, s, block, delta, signs);
}

double BlockSparseInstance::bound() const {
  return 4.0 * std::sqrt(static_cast<double>(dimension()));
}

absl::Status BlockSparseInstance::Sample(const Vector& x, RngStream& rng,
                                         Vector* out) const {
  if (x.size() != dimension()) {
    return absl::InvalidArgumentError("query dimension mismatch");
  }
  out->resize(dimension());
  for (int i = 0; i < dimension(); ++i) {
    const double xi = rng.Bernoulli((1.0 + v_[i]) / 2.0) ? 1.0 : -1.0;
    (*out)[i] = 2.0 * (x[i] - xi);
  }
  return absl::OkStatus();
}

absl::Status BlockSparseInstance::SampleCoordinates(
    const Vector& x, const std::vector<int>& coords, RngStream& rng,
    Vector* out) const {
  if (x.size() != dimension()) {
    return absl::InvalidArgumentError("query dimension mismatch");
  }
  if (out->size() != dimension()) out->setZero(dimension());
  for (int i : coords) {
    const double xi = rng.Bernoulli((1.0 + v_[i]) / 2.0) ? 1.0 : -1.0;
    (*out)[i] = 2.0 * (x[i] - xi);
  }
  return absl::OkStatus();
}

absl::StatusOr<double> BlockSparseInstance::SampleCoordinate(
    const Vector& x, int i, RngStream& rng) const {
  const double xi = rng.Bernoulli((1.0 + v_[i]) / 2.0) ? 1.0 : -1.0;
  return 2.0 * (x[i] - xi);
}

absl::StatusOr<double> BlockSparseInstance::Value(const Vector& x) const {
  if (absl::Status s = CheckInDomain(x); !s.ok()) return s;
  return SquaredError(x);
}

absl::StatusOr<Vector> BlockSparseInstance::Gradient(const Vector& x) const {
  if (absl::Status s = CheckInDomain(x); !s.ok()) return s;
  return Vector(2.0 * (x - v_));
}

}  // namespace infocon
