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

#include "infocon/core/vector.h"

#include <cmath>

#include "absl/strings/str_cat.h"

namespace infocon {

absl::StatusOr<Vector> MakeVector(absl::Span<const double> values) {
  Vector x(static_cast<Eigen::Index>(values.size()));
  for (size_t i = 0; i < values.size(); ++i) x[i] = values[i];
  if (absl::Status s = CheckFinite(x); !s.ok()) return s;
  return x;
}

absl::Status CheckFinite(const Vector& x) {
  if (x.size() == 0) {
    return absl::InvalidArgumentError("vector must have dimension >= 1");
  }
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i])) {
      return absl::InvalidArgumentError(
          absl::StrCat("entry ", i, " is not finite"));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<double> Norm(const Vector& x, double p) {
  if (std::isnan(p) || p < 1.0) {
    return absl::InvalidArgumentError(
        absl::StrCat("norm exponent must be >= 1, got ", p));
  }
  return LpNorm(x, p);
}

double LpNorm(const Vector& x, double p) {
  if (x.size() == 0) return 0.0;
  const double max_abs = x.cwiseAbs().maxCoeff();
  if (p == kInfinityNorm || max_abs == 0.0) return max_abs;
  if (p == 1.0) return x.cwiseAbs().sum();
  if (p == 2.0) return max_abs * (x / max_abs).norm();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    sum += PowNonneg(std::abs(x[i]) / max_abs, p);
  }
  return max_abs * std::pow(sum, 1.0 / p);
}

double PowNonneg(double base, double exponent) {
  if (exponent >= 0.0 && exponent <= 64.0 &&
      exponent == static_cast<double>(static_cast<int>(exponent))) {
    unsigned n = static_cast<unsigned>(exponent);
    double result = 1.0;
    while (n > 0) {
      if (n & 1u) result *= base;
      base *= base;
      n >>= 1;
    }
    return result;
  }
  return std::pow(base, exponent);
}

double HolderConjugate(double p) {
  if (p == 1.0) return kInfinityNorm;
  if (p == kInfinityNorm) return 1.0;
  return p / (p - 1.0);
}

double DimensionRoot(int dimension, double p) {
  if (p == kInfinityNorm) return 1.0;
  return std::pow(static_cast<double>(dimension), 1.0 / p);
}

}  // namespace infocon
