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

#include "infocon/analysis/mutual_information.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "infocon/channels/ldp_verifier.h"

namespace infocon {
namespace {

constexpr int kMaxDimension = 3;
constexpr int64_t kMaxHorizon = 3;

// p log(p / q) with the 0 log 0 = 0 convention.
double XLogRatio(double p, double q) {
  return p > 0.0 ? p * std::log(p / q) : 0.0;
}

double Entropy(const Eigen::VectorXd& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

Vector SignVectorFromIndex(int dimension, int k) {
  Vector v(dimension);
  for (int i = 0; i < dimension; ++i) v(i) = (k >> i) & 1 ? 1.0 : -1.0;
  return v;
}

absl::StatusOr<ConvexHardInstance> WithSigns(const ConvexHardInstance& inst,
                                             Vector v) {
  return ConvexHardInstance::Create(std::move(v), inst.delta(), inst.bound(),
                                    inst.diameter(), inst.p(), inst.regime());
}

// P_v(X(j) = -level) in column 0 and P_v(X(j) = +level) in column 1,
// accumulated from the full sample law over {-level, +level}^d.
Eigen::MatrixXd CoordinateLaw(const ConvexHardInstance& inst) {
  const int d = inst.dimension();
  const double level = inst.level();
  Eigen::MatrixXd law = Eigen::MatrixXd::Zero(d, 2);
  for (int k = 0; k < (1 << d); ++k) {
    const Vector x = level * SignVectorFromIndex(d, k);
    const double prob = inst.SampleProbability(x);
    for (int j = 0; j < d; ++j) law(j, (k >> j) & 1) += prob;
  }
  return law;
}

absl::Status CheckSmallP12(const ConvexHardInstance& inst) {
  if (inst.regime() != ConvexRegime::kP12) {
    return absl::InvalidArgumentError(
        "exact enumeration supports the P12 instance only");
  }
  if (inst.dimension() > kMaxDimension) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "enumeration needs d <= %d, got %d", kMaxDimension, inst.dimension()));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<JointLaw> JointLaw::Create(int dimension,
                                          Eigen::MatrixXd table) {
  if (dimension < 1 || dimension > 20) {
    return absl::InvalidArgumentError(
        absl::StrFormat("dimension %d out of range", dimension));
  }
  if (table.rows() != (int64_t{1} << dimension) || table.cols() < 1) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "table is %dx%d, need %d rows", table.rows(), table.cols(),
        int64_t{1} << dimension));
  }
  if (!table.allFinite() || table.minCoeff() < 0.0) {
    return absl::InvalidArgumentError("table entries must be finite and >= 0");
  }
  if (std::abs(table.sum() - 1.0) > 1e-12) {
    return absl::InvalidArgumentError(
        absl::StrFormat("table sums to %.17g", table.sum()));
  }
  return JointLaw(dimension, std::move(table));
}

Eigen::MatrixXd JointLaw::CoordinateMarginal(int i) const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, table_.cols());
  for (int k = 0; k < table_.rows(); ++k) m.row((k >> i) & 1) += table_.row(k);
  return m;
}

double JointLaw::MutualInformation(int i) const {
  const Eigen::MatrixXd m = CoordinateMarginal(i);
  double conditional = 0.0;
  for (int s = 0; s < 2; ++s) {
    const double ps = m.row(s).sum();
    if (ps > 0.0) conditional += ps * Entropy(m.row(s).transpose() / ps);
  }
  // Information is nonnegative; a negative result is cancellation error.
  return std::max(0.0, Entropy(m.colwise().sum().transpose()) - conditional);
}

double JointLaw::MutualInformationKl(int i) const {
  const Eigen::MatrixXd m = CoordinateMarginal(i);
  const Eigen::RowVectorXd py = m.colwise().sum();
  double info = 0.0;
  for (int s = 0; s < 2; ++s) {
    const double ps = m.row(s).sum();
    if (ps <= 0.0) continue;
    double kl = 0.0;
    for (int y = 0; y < m.cols(); ++y) kl += XLogRatio(m(s, y) / ps, py(y));
    info += ps * kl;
  }
  return std::max(0.0, info);
}

double JointLaw::SumMutualInformation() const {
  double total = 0.0;
  for (int i = 0; i < dimension_; ++i) total += MutualInformation(i);
  return total;
}

absl::StatusOr<JointLaw> JointLaw::PostProcess(
    const Eigen::MatrixXd& channel) const {
  if (channel.rows() != table_.cols()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "channel has %d rows, law has %d outputs", channel.rows(),
        table_.cols()));
  }
  if (absl::Status s = CheckRowStochastic(channel, 1e-12); !s.ok()) return s;
  return JointLaw::Create(dimension_, table_ * channel);
}

absl::StatusOr<JointLaw> ObliviousJointLaw(const ConvexHardInstance& inst,
                                           const Strategy& strategy) {
  if (absl::Status s = CheckSmallP12(inst); !s.ok()) return s;
  if (strategy.adaptive()) {
    return absl::InvalidArgumentError(
        "exact enumeration supports nonadaptive strategies only");
  }
  const int64_t horizon = strategy.horizon();
  if (horizon < 1 || horizon > kMaxHorizon) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "enumeration needs 1 <= T <= %d, got %d", kMaxHorizon, horizon));
  }
  const int d = inst.dimension();
  const int symbols = 2 * d;

  std::vector<std::vector<double>> probs;
  RngStream unused(0, 0);
  for (int64_t t = 1; t <= horizon; ++t) {
    absl::StatusOr<ChannelSpec> spec = strategy.Next({}, t, unused);
    if (!spec.ok()) return spec.status();
    const auto* obl = std::get_if<Oblivious>(&spec->kind());
    if (obl == nullptr) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "step %d uses a %s channel; only oblivious channels have a finite "
          "output alphabet here",
          t, spec->Name()));
    }
    if (spec->dimension() != d) {
      return absl::InvalidArgumentError("channel dimension mismatch");
    }
    probs.push_back(obl->probs);
  }

  int64_t outputs = 1;
  for (int64_t t = 0; t < horizon; ++t) outputs *= symbols;
  const int rows = 1 << d;
  Eigen::MatrixXd table(rows, outputs);
  for (int k = 0; k < rows; ++k) {
    absl::StatusOr<ConvexHardInstance> inst_v =
        WithSigns(inst, SignVectorFromIndex(d, k));
    if (!inst_v.ok()) return inst_v.status();
    const Eigen::MatrixXd law = CoordinateLaw(*inst_v);
    // Per-step output law: symbol 2 j + s has probability p_j P(X(j) = z_s).
    std::vector<Eigen::VectorXd> step(horizon, Eigen::VectorXd(symbols));
    for (int64_t t = 0; t < horizon; ++t) {
      for (int j = 0; j < d; ++j) {
        for (int s = 0; s < 2; ++s) step[t](2 * j + s) = probs[t][j] * law(j, s);
      }
    }
    for (int64_t y = 0; y < outputs; ++y) {
      double prob = 1.0 / rows;
      int64_t rest = y;
      for (int64_t t = 0; t < horizon; ++t) {
        prob *= step[t](rest % symbols);
        rest /= symbols;
      }
      table(k, y) = prob;
    }
  }
  return JointLaw::Create(d, std::move(table));
}

absl::StatusOr<double> BruteForceAvgMi(const ConvexHardInstance& inst,
                                       const Strategy& strategy) {
  absl::StatusOr<JointLaw> law = ObliviousJointLaw(inst, strategy);
  if (!law.ok()) return law.status();
  return law->SumMutualInformation();
}

absl::StatusOr<double> ObliviousInformationConstant(
    const ConvexHardInstance& inst) {
  if (absl::Status s = CheckSmallP12(inst); !s.ok()) return s;
  const int d = inst.dimension();
  std::vector<Eigen::MatrixXd> laws;
  for (int k = 0; k < (1 << d); ++k) {
    absl::StatusOr<ConvexHardInstance> inst_v =
        WithSigns(inst, SignVectorFromIndex(d, k));
    if (!inst_v.ok()) return inst_v.status();
    laws.push_back(CoordinateLaw(*inst_v));
  }
  // |X_i|: values of X(i) with positive probability under some v.
  int max_values = 0;
  for (int i = 0; i < d; ++i) {
    int values = 0;
    for (int s = 0; s < 2; ++s) {
      bool seen = false;
      for (const auto& law : laws) seen = seen || law(i, s) > 0.0;
      values += seen;
    }
    max_values = std::max(max_values, values);
  }
  double ratio = 0.0;
  for (int k = 0; k < (1 << d); ++k) {
    for (int i = 0; i < d; ++i) {
      const int flipped = k ^ (1 << i);
      for (int s = 0; s < 2; ++s) {
        const double num = laws[flipped](i, s);
        const double den = laws[k](i, s);
        if (den > 0.0) {
          ratio = std::max(ratio, num / den);
        } else if (num > 0.0) {
          ratio = std::numeric_limits<double>::infinity();
        }
      }
    }
  }
  return (max_values - 1) * ratio;
}

absl::StatusOr<double> ObliviousInformationBound(const ConvexHardInstance& inst,
                                                 int64_t horizon) {
  absl::StatusOr<double> c = ObliviousInformationConstant(inst);
  if (!c.ok()) return c.status();
  const double gamma = Gamma(inst.delta(), inst.regime(), inst.dimension());
  return 0.5 * *c * static_cast<double>(horizon) * gamma * gamma;
}

}  // namespace infocon
