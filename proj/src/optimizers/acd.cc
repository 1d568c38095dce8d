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

#include "infocon/optimizers/acd.h"

#include <cmath>
#include <memory>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "infocon/channels/channel.h"

namespace infocon {
namespace {

// Index of the largest |sums[k]|, first on ties.
int ArgMaxAbs(const std::vector<double>& sums) {
  int best = 0;
  for (int k = 1; k < static_cast<int>(sums.size()); ++k) {
    if (std::abs(sums[k]) > std::abs(sums[best])) best = k;
  }
  return best;
}

struct AcdShape {
  int d;
  int s;
  int64_t horizon;
  int64_t explore_per_block;  // T s / (2 d)
  int64_t exploit_per_coord;  // T / (2 s)

  int64_t half() const { return horizon / 2; }

  // Coordinate queried at 1-based step t of the exploration phase.
  int ExploreCoordinate(int64_t t) const {
    return static_cast<int>((t - 1) / explore_per_block) * s;
  }
  int ExploitCoordinate(int block, int64_t t) const {
    return block * s + static_cast<int>((t - half() - 1) / exploit_per_coord);
  }
};

absl::StatusOr<AcdShape> MakeShape(int d, int s, int64_t horizon) {
  if (absl::Status st = ValidateAcdShape(d, s, horizon); !st.ok()) return st;
  return AcdShape{d, s, horizon, horizon * s / (2 * d), horizon / (2 * s)};
}

}  // namespace

absl::StatusOr<RunResult> AcdRun(const BlockSparseInstance& inst,
                                 int64_t horizon, RngStream& rng) {
  absl::StatusOr<AcdShape> shape =
      MakeShape(inst.dimension(), inst.block_size(), horizon);
  if (!shape.ok()) return shape.status();
  const int d = shape->d;
  const Vector x = Vector::Zero(d);

  // Sums of ghat = -2 X, which ranks blocks the same way as sums of X.
  std::vector<double> sums(d / shape->s, 0.0);
  for (int64_t t = 1; t <= shape->half(); ++t) {
    const int i = shape->ExploreCoordinate(t);
    absl::StatusOr<double> g = inst.SampleCoordinate(x, i, rng);
    if (!g.ok()) return g.status();
    sums[i / shape->s] += *g;
  }
  const int block = ArgMaxAbs(sums);

  Vector exploit_sums = Vector::Zero(d);
  for (int64_t t = shape->half() + 1; t <= horizon; ++t) {
    const int i = shape->ExploitCoordinate(block, t);
    absl::StatusOr<double> g = inst.SampleCoordinate(x, i, rng);
    if (!g.ok()) return g.status();
    exploit_sums(i) += *g;
  }

  RunResult result;
  result.output = exploit_sums * (-0.5 / static_cast<double>(
                                             shape->exploit_per_coord));
  result.queries_used = horizon;
  result.total_bits = horizon * (IndexBits(d) + 64);
  return result;
}

absl::StatusOr<AdaptiveRule> AcdSelectionRule(int dimension, int s,
                                              int64_t horizon) {
  absl::StatusOr<AcdShape> shape = MakeShape(dimension, s, horizon);
  if (!shape.ok()) return shape.status();
  // The selected block, computed once the exploration history is complete.
  auto selected = std::make_shared<int>(-1);
  return AdaptiveRule(
      [shape = *shape, selected](const MessageHistory& history, int64_t t,
                                 RngStream&) -> absl::StatusOr<ChannelSpec> {
        if (t < 1 || t > shape.horizon) {
          return absl::OutOfRangeError(
              absl::StrFormat("step %d outside [1, %d]", t, shape.horizon));
        }
        if (t <= shape.half()) {
          return ChannelSpec::PointMass(shape.d, shape.ExploreCoordinate(t));
        }
        if (t == shape.half() + 1 || *selected < 0) {
          if (static_cast<int64_t>(history.size()) < shape.half()) {
            return absl::FailedPreconditionError(absl::StrFormat(
                "selection needs %d exploration messages, have %d",
                shape.half(), history.size()));
          }
          std::vector<double> sums(shape.d / shape.s, 0.0);
          for (int64_t k = 0; k < shape.half(); ++k) {
            const auto* c =
                std::get_if<CoordinatePayload>(&history[k].payload);
            if (c == nullptr) {
              return absl::InvalidArgumentError(
                  "exploration message is not a coordinate release");
            }
            sums[c->index / shape.s] += c->value;
          }
          *selected = ArgMaxAbs(sums);
        }
        return ChannelSpec::PointMass(shape.d,
                                      shape.ExploitCoordinate(*selected, t));
      });
}

absl::StatusOr<RunResult> NonadaptiveBlockSparseRun(
    const BlockSparseInstance& inst, int64_t horizon, RngStream& rng) {
  const int d = inst.dimension();
  const int s = inst.block_size();
  if (absl::Status st = ValidateNonadaptiveShape(d, s, horizon); !st.ok()) {
    return st;
  }
  const Vector x = Vector::Zero(d);
  Vector sums = Vector::Zero(d);
  for (int64_t t = 1; t <= horizon; ++t) {
    const int i = static_cast<int>((t - 1) % d);
    absl::StatusOr<double> g = inst.SampleCoordinate(x, i, rng);
    if (!g.ok()) return g.status();
    sums(i) += *g;
  }
  const Vector means = sums * (-0.5 / static_cast<double>(horizon / d));

  int block = 0;
  double best = -1.0;
  for (int k = 0; k < d / s; ++k) {
    const double score = means.segment(k * s, s).squaredNorm();
    if (score > best) {
      best = score;
      block = k;
    }
  }
  RunResult result;
  result.output = Vector::Zero(d);
  result.output.segment(block * s, s) = means.segment(block * s, s);
  result.queries_used = horizon;
  result.total_bits = horizon * (IndexBits(d) + 64);
  return result;
}

double AcdErrorBound(int dimension, int s, int64_t horizon) {
  const double d = dimension;
  return (36.0 * d * std::log(d / s) + 2.0 * s * s) /
         static_cast<double>(horizon);
}

}  // namespace infocon
