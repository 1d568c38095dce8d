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

#include "infocon/optimizers/mirror_descent.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace infocon {
namespace {

constexpr int kMaxIterations = 200;

Vector SoftThreshold(const Vector& theta, double lambda) {
  return theta.unaryExpr([lambda](double v) {
    const double m = std::abs(v) - lambda;
    return m > 0.0 ? std::copysign(m, v) : 0.0;
  });
}

}  // namespace

absl::StatusOr<Vector> MirrorDescentStep(const Vector& x, const Vector& g,
                                         double eta, const MirrorMap& map,
                                         double radius, MirrorStepInfo* info) {
  if (x.size() != g.size()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "x has dimension %d, g has %d", x.size(), g.size()));
  }
  if (!(eta >= 0.0) || std::isinf(eta)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("step size must be finite and >= 0, got %g", eta));
  }
  if (!(radius > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("radius must be positive, got %g", radius));
  }
  if (absl::Status s = CheckFinite(x); !s.ok()) return s;
  if (absl::Status s = CheckFinite(g); !s.ok()) return s;
  if (info != nullptr) *info = MirrorStepInfo{};

  const Vector theta = map.Grad(x) - eta * g;
  Vector y = map.GradInverse(theta);
  if (std::isinf(radius) || y.lpNorm<1>() <= radius) return y;

  // f(lambda) = ||x(lambda)||_1 - R falls from f(0) > 0 to -R at
  // lambda = max |theta|.
  const double tol = 1e-8 * std::max(1.0, radius);
  double lo = 0.0;
  double f_lo = y.lpNorm<1>() - radius;
  double hi = theta.lpNorm<Eigen::Infinity>();
  double f_hi = -radius;
  Vector best = Vector::Zero(x.size());
  int side = 0;
  int it = 0;
  bool converged = false;
  for (; it < kMaxIterations && !converged; ++it) {
    double lambda = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
    if (!(lambda > lo && lambda < hi)) lambda = 0.5 * (lo + hi);
    Vector cand = map.GradInverse(SoftThreshold(theta, lambda));
    const double f = cand.lpNorm<1>() - radius;
    if (f <= 0.0) {
      hi = lambda;
      f_hi = f;
      best = std::move(cand);
      if (f >= -tol) {
        converged = true;
        continue;
      }
      if (side == -1) f_lo *= 0.5;
      side = -1;
    } else {
      lo = lambda;
      f_lo = f;
      if (side == +1) f_hi *= 0.5;
      side = +1;
    }
    // Bracket at machine resolution: hi is the exact multiplier.
    if (hi - lo <= 1e-15 * std::max(1.0, hi)) converged = true;
  }
  if (!converged) {
    return absl::InternalError(absl::StrFormat(
        "l1 projection did not converge in %d iterations: lambda in [%g, %g], "
        "norm excess %g",
        kMaxIterations, lo, hi, f_hi));
  }
  if (info != nullptr) {
    info->projected = true;
    info->iterations = it;
  }
  return best;
}

absl::StatusOr<Vector> MirrorDescentStep(const Vector& x, const Vector& g,
                                         double eta, double a,
                                         const Domain& domain) {
  if (domain.kind() != Domain::Kind::kL1Ball) {
    return absl::InvalidArgumentError(
        "mirror descent step needs an l1 ball domain");
  }
  if (x.size() != domain.dimension()) {
    return absl::InvalidArgumentError("domain dimension mismatch");
  }
  absl::StatusOr<MirrorMap> map = MirrorMap::Create(a);
  if (!map.ok()) return map.status();
  return MirrorDescentStep(x, g, eta, *map, domain.radius());
}

}  // namespace infocon
