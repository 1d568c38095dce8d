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

#ifndef INFOCON_ORACLES_HARD_INSTANCES_H_
#define INFOCON_ORACLES_HARD_INSTANCES_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "infocon/oracles/oracle.h"

namespace infocon {

// Sign vectors in {-1, +1}^d are stored as doubles.
absl::Status CheckSignVector(const Vector& v);
// Uniform sign vector drawn from `rng`.
Vector RandomSignVector(int dimension, RngStream& rng);

enum class ConvexRegime {
  // p in [1, 2]: independent coordinates of magnitude B / d^(1/q).
  kP12,
  // p in [2, inf]: one uniformly chosen coordinate of magnitude B.
  kPinf,
};

// g_v(x) = a * sum_i |x(i) - v(i) b| on the box ||x||_inf <= b, with
// b = D / (2 d^(1/p)) and a = 2 B delta / d^(1/q) (P12) or 2 B delta / d
// (Pinf). On the box g_v is affine with gradient -a v.
class ConvexHardInstance : public StochasticOracle {
 public:
  // Requires delta in [0, 1/2], B > 0, D > 0 and p inside the regime's
  // range.
  static absl::StatusOr<ConvexHardInstance> Create(Vector v, double delta,
                                                   double bound,
                                                   double diameter, double p,
                                                   ConvexRegime regime);

  std::string family() const override;
  const Domain& domain() const override { return domain_; }
  double bound() const override { return bound_; }
  double bound_exponent() const override { return q_; }

  absl::Status Sample(const Vector& x, RngStream& rng,
                      Vector* out) const override;
  absl::Status SampleCoordinates(const Vector& x,
                                 const std::vector<int>& coords,
                                 RngStream& rng, Vector* out) const override;
  absl::StatusOr<double> SampleCoordinate(const Vector& x, int i,
                                          RngStream& rng) const override;

  absl::StatusOr<double> Value(const Vector& x) const override;
  absl::StatusOr<Vector> Gradient(const Vector& x) const override;
  Vector Minimizer() const override { return b_ * v_; }
  double MinValue() const override { return 0.0; }

  // a (d b - <v, x>): the affine piece of g_v extended to all of R^d. It
  // agrees with Value() on the box and is nonnegative on the l1 ball of
  // radius d b.
  double AffineGap(const Vector& x) const;

  // Probability that Sample() returns exactly `sample` (zero off the
  // support).
  double SampleProbability(const Vector& sample) const;

  const Vector& v() const { return v_; }
  double delta() const { return delta_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double p() const { return p_; }
  double diameter() const { return diameter_; }
  ConvexRegime regime() const { return regime_; }
  // Magnitude of each nonzero sample coordinate.
  double level() const { return level_; }
  // True when delta <= 1/6, where the lower-bound constructions live.
  bool InLowerBoundRegime() const { return delta_ <= 1.0 / 6.0; }

 private:
  ConvexHardInstance(Vector v, double delta, double bound, double diameter,
                     double p, ConvexRegime regime, Domain domain);

  double MinusProbability(int i) const {
    return (1.0 + 2.0 * delta_ * v_[i]) / 2.0;
  }

  Vector v_;
  double delta_;
  double bound_;
  double diameter_;
  double p_;
  double q_;
  ConvexRegime regime_;
  Domain domain_;
  double a_;
  double b_;
  double level_;
};

// g_v(x) = a sum_i [(1 + 2 delta v(i))/2 f+_i(x) + (1 - 2 delta v(i))/2
// f-_i(x)] with f+-_i(x) = theta b |x(i) +- b| + (1 - theta)/4 (x(i) +- b)^2
// on the box ||x||_inf <= b. alpha = a (1 - theta)/4 and B = a b sqrt(d).
class StronglyConvexInstance : public StochasticOracle {
 public:
  // Requires theta in [0, 1], a, b > 0 and 0 <= 2 delta <= (1-theta)/(1+theta).
  static absl::StatusOr<StronglyConvexInstance> Create(Vector v, double delta,
                                                       double theta, double a,
                                                       double b);
  // b = D / (2 sqrt d), a = B / (sqrt(d) b), theta = 1 - 4 alpha / a.
  static absl::StatusOr<StronglyConvexInstance> FromModulus(Vector v,
                                                            double delta,
                                                            double alpha,
                                                            double bound,
                                                            double diameter);

  std::string family() const override { return "gsc"; }
  const Domain& domain() const override { return domain_; }
  double bound() const override { return bound_; }
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
  Vector Minimizer() const override;
  double MinValue() const override;

  // d/dx of f+_i and f-_i at scalar y, with sign(0) taken as +1.
  double PlusDerivative(double y) const;
  double MinusDerivative(double y) const;
  // The per-coordinate restriction g_{i,nu}(y).
  double CoordinateValue(double y, int nu) const;

  const Vector& v() const { return v_; }
  double delta() const { return delta_; }
  double theta() const { return theta_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double alpha() const { return a_ * (1.0 - theta_) / 4.0; }

 private:
  StronglyConvexInstance(Vector v, double delta, double theta, double a,
                         double b, Domain domain);

  double CoordinateSample(const Vector& x, int i, RngStream& rng) const;

  Vector v_;
  double delta_;
  double theta_;
  double a_;
  double b_;
  double bound_;
  Domain domain_;
};

// (1 + 2 delta s) / (1 - 2 delta s) for s = v(i) sign(x(i)) in {-1, +1}.
double LikelihoodRatio(double delta, int s);

// 4 delta / sqrt(1 - 4 delta^2), times 1/sqrt(d) in the Pinf regime.
double Gamma(double delta, ConvexRegime regime, int dimension);

// B / alpha >= D sqrt(d) / 4, with alpha = 0 counted as satisfied.
bool CheckBAlpha(double bound, double alpha, double diameter, int dimension);
bool CheckBAlpha(const StronglyConvexInstance& inst, double diameter);

}  // namespace infocon

#endif  // INFOCON_ORACLES_HARD_INSTANCES_H_
