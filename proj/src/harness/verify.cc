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

#include "infocon/harness/verify.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

#include "absl/status/statusor.h"
#include "absl/strings/str_format.h"
#include "infocon/channels/channel.h"
#include "infocon/channels/ldp_verifier.h"
#include "infocon/channels/quantizer.h"
#include "infocon/core/rng.h"
#include "infocon/core/vector.h"
#include "infocon/oracles/assumptions.h"
#include "infocon/oracles/block_sparse.h"
#include "infocon/oracles/discrepancy.h"
#include "infocon/oracles/hard_instances.h"

namespace infocon {
namespace {

// Stream ids per check, so adding a check never shifts another's draws.
enum : uint64_t {
  kQuantizerStream = 1,
  kPsiStream = 3,
  kBAlphaStream = 4,
  kFidelityStream = 5,
};

class Welford {
 public:
  void Add(double x) {
    ++n_;
    const double delta = x - mean_;
    mean_ += delta / n_;
    m2_ += delta * (x - mean_);
  }
  double mean() const { return mean_; }
  double StandardError() const {
    return n_ > 1 ? std::sqrt(m2_ / (n_ - 1) / n_) : 0.0;
  }

 private:
  double n_ = 0;
  double mean_ = 0;
  double m2_ = 0;
};

double UniformIn(RngStream& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.Uniform();
}

CheckResult Fail(const char* name, const std::string& detail) {
  return CheckResult{name, false, detail};
}

// Uniform point in the box domain, shrunk slightly off the faces so
// central differences stay inside.
Vector RandomInBox(const Domain& box, double shrink, RngStream& rng) {
  Vector x(box.dimension());
  for (int i = 0; i < box.dimension(); ++i) {
    x[i] = box.radius() * shrink * UniformIn(rng, -1.0, 1.0);
  }
  return x;
}

}  // namespace

CheckResult CheckQuantizerUnbiased(uint64_t seed) {
  constexpr const char* kName = "quantizer_unbiased";
  constexpr int kDim = 8;
  constexpr int kVectors = 20;
  constexpr int kDraws = 1000000;
  constexpr double kBound = 1.0;
  RngStream rng(seed, kQuantizerStream);
  std::vector<int> coords(kDim);
  for (int i = 0; i < kDim; ++i) coords[i] = i;
  double worst_z = 0.0;
  Vector decoded(kDim);
  for (int k = 0; k < kVectors; ++k) {
    Vector g(kDim);
    for (int i = 0; i < kDim; ++i) g[i] = UniformIn(rng, -kBound, kBound);
    std::vector<Welford> acc(kDim);
    for (int n = 0; n < kDraws; ++n) {
      absl::StatusOr<Message> m = OneBitQuantize(g, kBound, coords, rng);
      if (!m.ok()) return Fail(kName, std::string(m.status().message()));
      decoded.setZero();
      if (absl::Status s = AddDecoded(*m, 1.0, &decoded); !s.ok()) {
        return Fail(kName, std::string(s.message()));
      }
      for (int i = 0; i < kDim; ++i) acc[i].Add(decoded[i]);
    }
    for (int i = 0; i < kDim; ++i) {
      const double se = acc[i].StandardError();
      const double z = std::abs(acc[i].mean() - g[i]) / se;
      worst_z = std::max(worst_z, se > 0.0 ? z : 0.0);
    }
  }
  return CheckResult{kName, worst_z <= 5.0,
                     absl::StrFormat("max |mean - g(i)| / SE = %.4f over %d "
                                     "coordinates (limit 5)",
                                     worst_z, kVectors * kDim)};
}

CheckResult CheckLdpExactness() {
  constexpr const char* kName = "ldp_exactness";
  double worst_rr = 0.0;
  double worst_slack = -1e300;
  std::vector<Vector> grid;
  for (double x : {-1.0, 0.0, 1.0}) {
    for (double y : {-1.0, 0.0, 1.0}) {
      Vector g(2);
      g << x, y;
      grid.push_back(g);
    }
  }
  for (double eps : {0.1, 0.5, 1.0}) {
    absl::StatusOr<double> rr = VerifyLdp(RandomizedResponseMatrix(eps));
    if (!rr.ok()) return Fail(kName, std::string(rr.status().message()));
    worst_rr = std::max(worst_rr, std::abs(*rr - eps));
    absl::StatusOr<ChannelMatrix> w = LdpVectorMechanismMatrix(grid, eps, 1.0);
    if (!w.ok()) return Fail(kName, std::string(w.status().message()));
    absl::StatusOr<double> vec = VerifyLdp(*w);
    if (!vec.ok()) return Fail(kName, std::string(vec.status().message()));
    worst_slack = std::max(worst_slack, *vec - eps);
  }
  return CheckResult{
      kName, worst_rr <= 1e-12 && worst_slack <= 1e-9,
      absl::StrFormat("randomized response max |got - eps| = %.3g (limit "
                      "1e-12); vector mechanism max got - eps = %.3g (limit "
                      "1e-9)",
                      worst_rr, worst_slack)};
}

CheckResult CheckPsiClosedForms(uint64_t seed) {
  constexpr const char* kName = "psi_closed_forms";
  RngStream rng(seed, kPsiStream);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double a = UniformIn(rng, 0.1, 4.0);
    const double b = UniformIn(rng, 0.1, 4.0);
    const double theta = UniformIn(rng, 0.0, 0.95);
    const double delta =
        UniformIn(rng, 0.05, 1.0) * 0.5 * (1.0 - theta) / (1.0 + theta);
    const double step = 1e-3 * b;
    absl::StatusOr<PsiResult> convex =
        PsiMetric(ConvexCoordinateFamily(a, b, 1), step);
    if (!convex.ok()) return Fail(kName, std::string(convex.status().message()));
    const double want_c = ConvexPsiClosedForm(a, b);
    worst = std::max(worst, std::abs(convex->psi - want_c) / want_c);
    absl::StatusOr<PsiResult> strong = PsiMetric(
        StronglyConvexCoordinateFamily(a, b, delta, theta, 1), step);
    if (!strong.ok()) return Fail(kName, std::string(strong.status().message()));
    const double want_s = StronglyConvexPsiClosedForm(a, b, delta, theta);
    worst = std::max(worst, std::abs(strong->psi - want_s) / want_s);
  }
  return CheckResult{kName, worst <= 1e-3,
                     absl::StrFormat("max relative error %.3g over 20 draws "
                                     "(limit 1e-3)",
                                     worst)};
}

CheckResult CheckBAlphaBound(uint64_t seed) {
  constexpr const char* kName = "b_over_alpha";
  RngStream rng(seed, kBAlphaStream);
  double min_ratio = 1e300;
  for (int k = 0; k < 100; ++k) {
    const int d = 1 + static_cast<int>(rng.UniformInt(256));
    const double theta = UniformIn(rng, 0.0, 0.99);
    const double delta =
        UniformIn(rng, 0.0, 1.0) * 0.5 * (1.0 - theta) / (1.0 + theta);
    const double a = UniformIn(rng, 0.01, 10.0);
    const double b = UniformIn(rng, 0.01, 10.0);
    absl::StatusOr<StronglyConvexInstance> inst = StronglyConvexInstance::Create(
        RandomSignVector(d, rng), delta, theta, a, b);
    if (!inst.ok()) return Fail(kName, std::string(inst.status().message()));
    if (!CheckBAlpha(*inst, inst->b())) {
      return Fail(kName, absl::StrFormat(
                             "violated at d=%d delta=%g theta=%g a=%g b=%g", d,
                             delta, theta, a, b));
    }
    const double need = inst->b() * std::sqrt(static_cast<double>(d)) / 4.0;
    min_ratio = std::min(min_ratio, inst->bound() / inst->alpha() / need);
  }
  return CheckResult{
      kName, true,
      absl::StrFormat("100 instances; min (B/alpha) / (D sqrt(d)/4) = %.4f",
                      min_ratio)};
}

CheckResult CheckOracleFidelity(uint64_t seed) {
  constexpr const char* kName = "oracle_fidelity";
  constexpr int kDim = 8;
  constexpr int kPoints = 100;
  constexpr int64_t kSamples = 10000;
  RngStream rng(seed, kFidelityStream);

  std::vector<std::unique_ptr<StochasticOracle>> oracles;
  auto add = [&](auto inst) -> absl::Status {
    if (!inst.ok()) return inst.status();
    oracles.push_back(
        std::make_unique<std::decay_t<decltype(*inst)>>(*std::move(inst)));
    return absl::OkStatus();
  };
  absl::Status built = add(ConvexHardInstance::Create(
      RandomSignVector(kDim, rng), 0.1, 1.0, 2.0, 1.5, ConvexRegime::kP12));
  if (built.ok()) {
    built = add(ConvexHardInstance::Create(RandomSignVector(kDim, rng), 0.1,
                                           1.0, 2.0, 3.0, ConvexRegime::kPinf));
  }
  if (built.ok()) {
    built = add(StronglyConvexInstance::Create(RandomSignVector(kDim, rng), 0.1,
                                               0.3, 1.5, 0.8));
  }
  if (built.ok()) {
    built = add(BlockSparseInstance::Random(kDim, 2, 0.3, rng));
  }
  if (!built.ok()) return Fail(kName, std::string(built.message()));

  double worst_fd = 0.0;
  for (const auto& oracle : oracles) {
    for (int k = 0; k < kPoints; ++k) {
      const Vector x = RandomInBox(oracle->domain(), 1.0, rng);
      absl::StatusOr<AssumptionReport> r =
          CheckOracleAssumptions(*oracle, x, kSamples, rng);
      if (!r.ok()) return Fail(kName, std::string(r.status().message()));
      if (!r->ok()) {
        return Fail(kName, absl::StrFormat("%s at point %d: %s",
                                           oracle->family(), k, r->violation));
      }
    }
  }

  const auto& gsc = static_cast<const StronglyConvexInstance&>(*oracles[2]);
  const double h = 1e-6 * gsc.b();
  const double floor = 1e-3 * gsc.a() * gsc.b();
  for (int k = 0; k < kPoints; ++k) {
    const Vector x = RandomInBox(gsc.domain(), 1.0 - 1e-5, rng);
    absl::StatusOr<Vector> grad = gsc.Gradient(x);
    if (!grad.ok()) return Fail(kName, std::string(grad.status().message()));
    for (int i = 0; i < kDim; ++i) {
      Vector xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      absl::StatusOr<double> fp = gsc.Value(xp);
      absl::StatusOr<double> fm = gsc.Value(xm);
      if (!fp.ok() || !fm.ok()) return Fail(kName, "value outside domain");
      const double fd = (*fp - *fm) / (2.0 * h);
      worst_fd = std::max(worst_fd, std::abs((*grad)[i] - fd) /
                                        std::max(std::abs(fd), floor));
    }
  }
  return CheckResult{
      kName, worst_fd <= 1e-4,
      absl::StrFormat("%d families x %d points unbiased and bounded; gsc "
                      "gradient max relative error %.3g (limit 1e-4)",
                      static_cast<int>(oracles.size()), kPoints, worst_fd)};
}

std::vector<CheckResult> RunVerifySuite(uint64_t seed) {
  return {CheckQuantizerUnbiased(seed), CheckLdpExactness(),
          CheckPsiClosedForms(seed), CheckBAlphaBound(seed),
          CheckOracleFidelity(seed)};
}

std::string FormatReport(const std::vector<CheckResult>& results) {
  std::string out;
  int passed = 0;
  for (const CheckResult& r : results) {
    absl::StrAppendFormat(&out, "%s %s: %s\n", r.passed ? "PASS" : "FAIL",
                          r.name, r.detail);
    passed += r.passed;
  }
  absl::StrAppendFormat(&out, "%d/%d checks passed\n", passed,
                        static_cast<int>(results.size()));
  return out;
}

bool AllPassed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace infocon
