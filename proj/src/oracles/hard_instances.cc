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

#include "infocon/oracles/hard_instances.h"

#include <cmath>

#include "absl/strings/str_format.h"

namespace infocon {
namespace {

inline double SignPlus(double y) { return y >= 0.0 ? 1.0 : -1.0; }

absl::Status CheckRange(const char* name, double value, double lo, double hi) {
  if (!(value >= lo && value <= hi)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("%s = %g outside [%g, %g]", name, value, lo, hi));
  }
  return absl::OkStatus();
}

absl::Status CheckPositive(const char* name, double value) {
  if (!(value > 0.0) || std::isinf(value)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("%s must be positive and finite, got %g", name, value));
  }
  return absl::OkStatus();
}

}  // namespace

absl::Status CheckSignVector(const Vector& v) {
  if (v.size() == 0) return absl::InvalidArgumentError("sign vector is empty");
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] != 1.0 && v[i] != -1.0) {
      return absl::InvalidArgumentError(
          absl::StrFormat("v(%d) = %g is not a sign", i, v[i]));
    }
  }
  return absl::OkStatus();
}

Vector RandomSignVector(int dimension, RngStream& rng) {
  Vector v(dimension);
  for (int i = 0; i < dimension; ++i) v[i] = rng.Bernoulli(0.5) ? 1.0 : -1.0;
  return v;
}

// ---------------------------------------------------------------------------
// ConvexHardInstance

ConvexHardInstance::ConvexHardInstance(Vector v, double delta, double bound,
                                       double diameter, double p,
                                       ConvexRegime regime, Domain domain)
    : v_(std::move(v)),
      delta_(delta),
      bound_(bound),
      diameter_(diameter),
      p_(p),
      q_(HolderConjugate(p)),
      regime_(regime),
      domain_(domain) {
  const int d = static_cast<int>(v_.size());
  b_ = domain_.radius();
  if (regime_ == ConvexRegime::kP12) {
    level_ = bound_ / DimensionRoot(d, q_);
    a_ = 2.0 * bound_ * delta_ / DimensionRoot(d, q_);
  } else {
    level_ = bound_;
    a_ = 2.0 * bound_ * delta_ / d;
  }
}

absl::StatusOr<ConvexHardInstance> ConvexHardInstance::Create(
    Vector v, double delta, double bound, double diameter, double p,
    ConvexRegime regime) {
  if (absl::Status s = CheckSignVector(v); !s.ok()) return s;
  if (absl::Status s = CheckRange("delta", delta, 0.0, 0.5); !s.ok()) return s;
  if (absl::Status s = CheckPositive("B", bound); !s.ok()) return s;
  if (absl::Status s = CheckPositive("D", diameter); !s.ok()) return s;
  if (regime == ConvexRegime::kP12) {
    if (absl::Status s = CheckRange("p", p, 1.0, 2.0); !s.ok()) return s;
  } else if (!(p >= 2.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("the Pinf regime needs p >= 2, got %g", p));
  }
  const int d = static_cast<int>(v.size());
  absl::StatusOr<Domain> box = Domain::Box(d, diameter / (2.0 * DimensionRoot(d, p)));
  if (!box.ok()) return box.status();
  return ConvexHardInstance(std::move(v), delta, bound, diameter, p, regime,
                            *box);
}

std::string ConvexHardInstance::family() const {
  return regime_ == ConvexRegime::kP12 ? "gc_p12" : "gc_pinf";
}

absl::Status ConvexHardInstance::Sample(const Vector& x, RngStream& rng,
                                        Vector* out) const {
  (void)x;
  const int d = dimension();
  out->setZero(d);
  if (regime_ == ConvexRegime::kP12) {
    for (int i = 0; i < d; ++i) {
      (*out)[i] = rng.Bernoulli(MinusProbability(i)) ? -level_ : level_;
    }
  } else {
    const int i = static_cast<int>(rng.UniformInt(d));
    (*out)[i] = rng.Bernoulli(MinusProbability(i)) ? -level_ : level_;
  }
  return absl::OkStatus();
}

absl::Status ConvexHardInstance::SampleCoordinates(
    const Vector& x, const std::vector<int>& coords, RngStream& rng,
    Vector* out) const {
  if (regime_ == ConvexRegime::kPinf) return Sample(x, rng, out);
  if (out->size() != dimension()) out->setZero(dimension());
  for (int i : coords) {
    (*out)[i] = rng.Bernoulli(MinusProbability(i)) ? -level_ : level_;
  }
  return absl::OkStatus();
}

absl::StatusOr<double> ConvexHardInstance::SampleCoordinate(
    const Vector& x, int i, RngStream& rng) const {
  (void)x;
  if (regime_ == ConvexRegime::kP12) {
    return rng.Bernoulli(MinusProbability(i)) ? -level_ : level_;
  }
  const int j = static_cast<int>(rng.UniformInt(dimension()));
  const double value = rng.Bernoulli(MinusProbability(j)) ? -level_ : level_;
  return j == i ? value : 0.0;
}

absl::StatusOr<double> ConvexHardInstance::Value(const Vector& x) const {
  if (absl::Status s = CheckInDomain(x); !s.ok()) return s;
  return a_ * (x - b_ * v_).cwiseAbs().sum();
}

absl::StatusOr<Vector> ConvexHardInstance::Gradient(const Vector& x) const {
  if (absl::Status s = CheckInDomain(x); !s.ok()) return s;
  return Vector(-a_ * v_);
}

double ConvexHardInstance::AffineGap(const Vector& x) const {
  return a_ * (dimension() * b_ - v_.dot(x));
}

double ConvexHardInstance::SampleProbability(const Vector& sample) const {
  const int d = dimension();
  if (sample.size() != d) return 0.0;
  auto coordinate_law = [&](int i, double value) {
    if (value == -level_) return MinusProbability(i);
    if (value == level_) return 1.0 - MinusProbability(i);
    return 0.0;
  };
  if (regime_ == ConvexRegime::kP12) {
    double prob = 1.0;
    for (int i = 0; i < d; ++i) prob *= coordinate_law(i, sample[i]);
    return prob;
  }
  int nonzero = -1;
  for (int i = 0; i < d; ++i) {
    if (sample[i] == 0.0) continue;
    if (nonzero >= 0) return 0.0;
    nonzero = i;
  }
  if (nonzero < 0) return 0.0;
  return coordinate_law(nonzero, sample[nonzero]) / d;
}

// ---------------------------------------------------------------------------
// StronglyConvexInstance

StronglyConvexInstance::StronglyConvexInstance(Vector v, double delta,
                                               double theta, double a,
                                               double b, Domain domain)
    : v_(std::move(v)),
      delta_(delta),
      theta_(theta),
      a_(a),
      b_(b),
      bound_(a * b * std::sqrt(static_cast<double>(v_.size()))),
      domain_(domain) {}

absl::StatusOr<StronglyConvexInstance> StronglyConvexInstance::Create(
    Vector v, double delta, double theta, double a, double b) {
  if (absl::Status s = CheckSignVector(v); !s.ok()) return s;
  if (absl::Status s = CheckRange("theta", theta, 0.0, 1.0); !s.ok()) return s;
  if (absl::Status s = CheckPositive("a", a); !s.ok()) return s;
  if (absl::Status s = CheckPositive("b", b); !s.ok()) return s;
  const double delta_max = 0.5 * (1.0 - theta) / (1.0 + theta);
  if (!(delta >= 0.0 && delta <= delta_max * (1.0 + 1e-12))) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "delta = %g violates 0 <= 2 delta <= (1 - theta)/(1 + theta) with "
        "theta = %g",
        delta, theta));
  }
  absl::StatusOr<Domain> box = Domain::Box(static_cast<int>(v.size()), b);
  if (!box.ok()) return box.status();
  return StronglyConvexInstance(std::move(v), delta, theta, a, b, *box);
}

absl::StatusOr<StronglyConvexInstance> StronglyConvexInstance::FromModulus(
    Vector v, double delta, double alpha, double bound, double diameter) {
  if (absl::Status s = CheckPositive("B", bound); !s.ok()) return s;
  if (absl::Status s = CheckPositive("D", diameter); !s.ok()) return s;
  const double root_d = std::sqrt(static_cast<double>(v.size()));
  const double b = diameter / (2.0 * root_d);
  const double a = bound / (root_d * b);
  if (!(alpha >= 0.0 && alpha <= a / 4.0)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "alpha = %g outside [0, a/4] with a = %g", alpha, a));
  }
  return Create(std::move(v), delta, 1.0 - 4.0 * alpha / a, a, b);
}

double StronglyConvexInstance::PlusDerivative(double y) const {
  return theta_ * b_ * SignPlus(y + b_) + (1.0 - theta_) / 2.0 * (y + b_);
}

double StronglyConvexInstance::MinusDerivative(double y) const {
  return theta_ * b_ * SignPlus(y - b_) + (1.0 - theta_) / 2.0 * (y - b_);
}

double StronglyConvexInstance::CoordinateValue(double y, int nu) const {
  return a_ * ((1.0 - theta_) / 4.0 * y * y +
               (1.0 + 3.0 * theta_) / 4.0 * b_ * b_ +
               delta_ * nu * (1.0 + theta_) * b_ * y);
}

double StronglyConvexInstance::CoordinateSample(const Vector& x, int i,
                                                RngStream& rng) const {
  const bool plus = rng.Bernoulli((1.0 + 2.0 * delta_ * v_[i]) / 2.0);
  return a_ * (plus ? PlusDerivative(x[i]) : MinusDerivative(x[i]));
}

absl::Status StronglyConvexInstance::Sample(const Vector& x, RngStream& rng,
                                            Vector* out) const {
  if (x.size() != dimension()) {
    return absl::InvalidArgumentError("query dimension mismatch");
  }
  out->resize(dimension());
  for (int i = 0; i < dimension(); ++i) (*out)[i] = CoordinateSample(x, i, rng);
  return absl::OkStatus();
}

absl::Status StronglyConvexInstance::SampleCoordinates(
    const Vector& x, const std::vector<int>& coords, RngStream& rng,
    Vector* out) const {
  if (x.size() != dimension()) {
    return absl::InvalidArgumentError("query dimension mismatch");
  }
  if (out->size() != dimension()) out->setZero(dimension());
  for (int i : coords) (*out)[i] = CoordinateSample(x, i, rng);
  return absl::OkStatus();
}

absl::StatusOr<double> StronglyConvexInstance::SampleCoordinate(
    const Vector& x, int i, RngStream& rng) const {
  return CoordinateSample(x, i, rng);
}

absl::StatusOr<double> StronglyConvexInstance::Value(const Vector& x) const {
  if (absl::Status s = CheckInDomain(x); !s.ok()) return s;
  double sum = 0.0;
  for (int i = 0; i < dimension(); ++i) {
    sum += CoordinateValue(x[i], static_cast<int>(v_[i]));
  }
  return sum;
}

absl::StatusOr<Vector> StronglyConvexInstance::Gradient(const Vector& x) const {
  if (absl::Status s = CheckInDomain(x); !s.ok()) return s;
  Vector g(dimension());
  for (int i = 0; i < dimension(); ++i) {
    const double w = (1.0 + 2.0 * delta_ * v_[i]) / 2.0;
    g[i] = a_ * (w * PlusDerivative(x[i]) + (1.0 - w) * MinusDerivative(x[i]));
  }
  return g;
}

Vector StronglyConvexInstance::Minimizer() const {
  if (theta_ == 1.0) return Vector::Zero(dimension());
  return (-2.0 * delta_ * (1.0 + theta_) / (1.0 - theta_) * b_) * v_;
}

double StronglyConvexInstance::MinValue() const {
  const double per_coordinate =
      theta_ == 1.0
          ? a_ * b_ * b_
          : a_ * b_ * b_ *
                ((1.0 + 3.0 * theta_) / 4.0 -
                 delta_ * delta_ * (1.0 + theta_) * (1.0 + theta_) /
                     (1.0 - theta_));
  return dimension() * per_coordinate;
}

// ---------------------------------------------------------------------------

double LikelihoodRatio(double delta, int s) {
  return (1.0 + 2.0 * delta * s) / (1.0 - 2.0 * delta * s);
}

double Gamma(double delta, ConvexRegime regime, int dimension) {
  const double g = 4.0 * delta / std::sqrt(1.0 - 4.0 * delta * delta);
  if (regime == ConvexRegime::kPinf) {
    return g / std::sqrt(static_cast<double>(dimension));
  }
  return g;
}

bool CheckBAlpha(double bound, double alpha, double diameter, int dimension) {
  const double rhs = diameter * std::sqrt(static_cast<double>(dimension)) / 4.0;
  if (alpha == 0.0) return bound > 0.0;
  return bound / alpha >= rhs;
}

bool CheckBAlpha(const StronglyConvexInstance& inst, double diameter) {
  return CheckBAlpha(inst.bound(), inst.alpha(), diameter, inst.dimension());
}

}  // namespace infocon
