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

#ifndef INFOCON_OPTIMIZERS_CONFIG_H_
#define INFOCON_OPTIMIZERS_CONFIG_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "infocon/core/domain.h"
#include "infocon/core/vector.h"

namespace infocon {

// Step sizes indexed by the 1-based step t.
class StepSchedule {
 public:
  enum class Kind { kConstant, kInvSqrt, kStronglyConvex };

  // eta_t = eta.
  static absl::StatusOr<StepSchedule> Constant(double eta);
  // eta_t = c / sqrt(t).
  static absl::StatusOr<StepSchedule> InvSqrt(double c);
  // eta_t = 2 / (alpha (t + 1)).
  static absl::StatusOr<StepSchedule> StronglyConvex(double alpha);

  Kind kind() const { return kind_; }
  double parameter() const { return parameter_; }
  double At(int64_t t) const;
  std::string DebugString() const;

 private:
  StepSchedule(Kind kind, double parameter)
      : kind_(kind), parameter_(parameter) {}

  Kind kind_;
  double parameter_;
};

enum class OutputMode { kAverage, kLastIterate };

// Called with (t, x_{t+1}) after every update.
using IterateObserver = std::function<void(int64_t t, const Vector& x)>;

struct OptConfig {
  int64_t horizon = 1;  // T, the number of oracle queries
  StepSchedule schedule = *StepSchedule::Constant(1.0);
  // Overrides the oracle's domain when set.
  std::optional<Domain> domain;
  // Defaults to the last iterate for the strongly convex schedule and to
  // the iterate average otherwise.
  std::optional<OutputMode> output;
  // Algorithm-specific fields.
  int bits_per_query = 1;  // r, for the permuted one-bit scheme
  double quantizer_bound = 1.0;  // B, for the permuted one-bit scheme
  int block_size = 1;  // s, for the block-sparse methods
  // When set, error(x) is recorded every trace_every steps.
  std::function<double(const Vector&)> error;
  int64_t trace_every = 0;
  IterateObserver observer;

  OutputMode ResolvedOutput() const;
};

struct TracePoint {
  int64_t t = 0;
  double error = 0.0;
};

struct RunResult {
  Vector output;
  std::vector<TracePoint> trace;
  int64_t total_bits = 0;
  int64_t queries_used = 0;
};

// r in [1, d], r | d and (d / r) | T.
absl::Status ValidatePiStarShape(int dimension, int r, int64_t horizon);
// s | d, and T / 2, T s / (2 d) and T / (2 s) are all integers >= 1.
absl::Status ValidateAcdShape(int dimension, int s, int64_t horizon);
// s | d and d | T.
absl::Status ValidateNonadaptiveShape(int dimension, int s, int64_t horizon);

}  // namespace infocon

#endif  // INFOCON_OPTIMIZERS_CONFIG_H_
