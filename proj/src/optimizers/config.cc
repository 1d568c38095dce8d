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

#include "infocon/optimizers/config.h"

#include <cmath>

#include "absl/strings/str_format.h"

namespace infocon {
namespace {

absl::Status CheckParameter(const char* name, double value) {
  if (!(value > 0.0) || std::isinf(value)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "%s must be positive and finite, got %g", name, value));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<StepSchedule> StepSchedule::Constant(double eta) {
  if (absl::Status s = CheckParameter("eta", eta); !s.ok()) return s;
  return StepSchedule(Kind::kConstant, eta);
}

absl::StatusOr<StepSchedule> StepSchedule::InvSqrt(double c) {
  if (absl::Status s = CheckParameter("c", c); !s.ok()) return s;
  return StepSchedule(Kind::kInvSqrt, c);
}

absl::StatusOr<StepSchedule> StepSchedule::StronglyConvex(double alpha) {
  if (absl::Status s = CheckParameter("alpha", alpha); !s.ok()) return s;
  return StepSchedule(Kind::kStronglyConvex, alpha);
}

double StepSchedule::At(int64_t t) const {
  const double tt = static_cast<double>(t);
  switch (kind_) {
    case Kind::kConstant:
      return parameter_;
    case Kind::kInvSqrt:
      return parameter_ / std::sqrt(tt);
    case Kind::kStronglyConvex:
      return 2.0 / (parameter_ * (tt + 1.0));
  }
  return 0.0;
}

std::string StepSchedule::DebugString() const {
  switch (kind_) {
    case Kind::kConstant:
      return absl::StrFormat("constant(%g)", parameter_);
    case Kind::kInvSqrt:
      return absl::StrFormat("inv_sqrt(%g)", parameter_);
    case Kind::kStronglyConvex:
      return absl::StrFormat("strongly_convex(%g)", parameter_);
  }
  return "";
}

OutputMode OptConfig::ResolvedOutput() const {
  if (output.has_value()) return *output;
  return schedule.kind() == StepSchedule::Kind::kStronglyConvex
             ? OutputMode::kLastIterate
             : OutputMode::kAverage;
}

absl::Status ValidatePiStarShape(int dimension, int r, int64_t horizon) {
  if (r < 1 || r > dimension || dimension % r != 0) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "bits per query r = %d must divide d = %d", r, dimension));
  }
  const int64_t per_phase = dimension / r;
  if (horizon < per_phase || horizon % per_phase != 0) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "T = %d must be a positive multiple of d / r = %d", horizon,
        per_phase));
  }
  return absl::OkStatus();
}

absl::Status ValidateAcdShape(int dimension, int s, int64_t horizon) {
  if (s < 1 || dimension % s != 0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("block size s = %d must divide d = %d", s, dimension));
  }
  const int64_t d = dimension;
  if (horizon < 2 || horizon % 2 != 0 || (horizon * s) % (2 * d) != 0 ||
      horizon % (2 * s) != 0) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "T = %d must make T/2, T s/(2 d) = T*%d/%d and T/(2 s) integers",
        horizon, s, 2 * d));
  }
  return absl::OkStatus();
}

absl::Status ValidateNonadaptiveShape(int dimension, int s, int64_t horizon) {
  if (s < 1 || dimension % s != 0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("block size s = %d must divide d = %d", s, dimension));
  }
  if (horizon < dimension || horizon % dimension != 0) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "T = %d must be a positive multiple of d = %d", horizon, dimension));
  }
  return absl::OkStatus();
}

}  // namespace infocon
