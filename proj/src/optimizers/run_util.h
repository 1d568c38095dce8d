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

#ifndef INFOCON_SRC_OPTIMIZERS_RUN_UTIL_H_
#define INFOCON_SRC_OPTIMIZERS_RUN_UTIL_H_

#include <cstdint>

#include "infocon/core/vector.h"
#include "infocon/optimizers/config.h"

namespace infocon::internal {

// Tracks the running output (average or last iterate) and the trace.
class OutputTracker {
 public:
  OutputTracker(const OptConfig& config, int dimension)
      : config_(config),
        mode_(config.ResolvedOutput()),
        sum_(Vector::Zero(dimension)) {}

  void Observe(int64_t t, const Vector& x, RunResult* result) {
    ++count_;
    if (mode_ == OutputMode::kAverage) sum_ += x;
    if (config_.observer) config_.observer(t, x);
    if (config_.error && config_.trace_every > 0 &&
        (t % config_.trace_every == 0 || t == config_.horizon)) {
      result->trace.push_back({t, config_.error(Current(x))});
    }
  }

  Vector Current(const Vector& last) const {
    if (mode_ == OutputMode::kLastIterate || count_ == 0) return last;
    return sum_ / static_cast<double>(count_);
  }

 private:
  const OptConfig& config_;
  OutputMode mode_;
  Vector sum_;
  int64_t count_ = 0;
};

}  // namespace infocon::internal

#endif  // INFOCON_SRC_OPTIMIZERS_RUN_UTIL_H_
