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

#include "infocon/harness/suites.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>
#include <utility>

#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "infocon/analysis/mutual_information.h"
#include "infocon/analysis/rate_fit.h"
#include "infocon/channels/channel.h"
#include "infocon/channels/strategy.h"
#include "infocon/harness/csv.h"
#include "infocon/optimizers/acd.h"
#include "infocon/oracles/hard_instances.h"

namespace infocon {
namespace {

std::vector<int64_t> PowersOfTwo(int lo, int hi, int step) {
  std::vector<int64_t> out;
  for (int k = lo; k <= hi; k += step) out.push_back(int64_t{1} << k);
  return out;
}

// Mean error per (algorithm, d, r, eps, T) cell.
struct CellKey {
  AlgorithmId algorithm;
  int d;
  int r;
  double eps;
  int64_t horizon;
  auto Tie() const { return std::tie(algorithm, d, r, eps, horizon); }
  bool operator<(const CellKey& o) const { return Tie() < o.Tie(); }
};

struct Table {
  std::map<CellKey, CellSummary> cells;
  std::string failure;  // first failed trial, if any

  const CellSummary* Find(AlgorithmId a, int d, int r, double eps,
                          int64_t t) const {
    auto it = cells.find(CellKey{a, d, r, eps, t});
    return it == cells.end() ? nullptr : &it->second;
  }
};

absl::StatusOr<Table> RunTable(const ExperimentConfig& config,
                               const RunOptions& options) {
  absl::StatusOr<std::vector<RunRecord>> records =
      RunExperiment(config, options);
  if (!records.ok()) return records.status();
  Table table;
  for (const RunRecord& r : *records) {
    if (!r.ok()) {
      table.failure = absl::StrFormat("trial %d at grid %d failed: %s",
                                      r.trial, r.grid_index, r.failure);
      break;
    }
  }
  for (const CellSummary& c : Summarize(*records)) {
    table.cells[CellKey{c.algorithm, c.point.d, c.point.r.value_or(0),
                        c.point.eps.value_or(0.0), c.point.horizon}] = c;
  }
  return table;
}

CheckResult Fail(const char* name, const std::string& detail) {
  return CheckResult{name, false, detail};
}

bool Within(double x, double lo, double hi) { return x >= lo && x <= hi; }

// Log-log slope of mean error against T with the other axes fixed.
absl::StatusOr<RateFit> SlopeInT(const Table& table, AlgorithmId a, int d,
                                 int r, const std::vector<int64_t>& horizons) {
  std::vector<std::pair<double, double>> pts;
  for (int64_t t : horizons) {
    const CellSummary* c = table.Find(a, d, r, 0.0, t);
    if (c == nullptr) return absl::InternalError("missing grid cell");
    pts.emplace_back(static_cast<double>(t), c->mean_error);
  }
  return FitRate(pts);
}

ExperimentConfig BaseConfig(const std::string& id, uint64_t seed, int trials) {
  ExperimentConfig c;
  c.id = id;
  c.kind = ExperimentKind::kRateSweep;
  c.seed = seed;
  c.trials = trials;
  return c;
}

}  // namespace

std::vector<double> SkewedProbabilities(int d) {
  std::vector<double> p(d);
  double total = 0.0;
  for (int i = 0; i < d; ++i) total += (p[i] = (i + 1.0) * (i + 1.0));
  for (double& x : p) x /= total;
  return p;
}

absl::StatusOr<MiCheckResult> MiCheck(int d, int64_t horizon, double delta,
                                      const std::vector<double>& probs) {
  if (d < 1 || d > 3 || horizon < 1 || horizon > 3) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "exact enumeration needs 1 <= d <= 3 and 1 <= T <= 3, got d=%d T=%d",
        d, horizon));
  }
  absl::StatusOr<ConvexHardInstance> inst = ConvexHardInstance::Create(
      Vector::Ones(d), delta, 1.0, 2.0, 2.0, ConvexRegime::kP12);
  if (!inst.ok()) return inst.status();
  absl::StatusOr<ChannelSpec> spec = probs.empty()
                                         ? ChannelSpec::UniformOblivious(d)
                                         : ChannelSpec::Obliv(d, probs);
  if (!spec.ok()) return spec.status();
  absl::StatusOr<Strategy> strategy =
      Strategy::Fixed(ChannelFamily::kOblivious, *std::move(spec), horizon);
  if (!strategy.ok()) return strategy.status();
  absl::StatusOr<double> info = BruteForceAvgMi(*inst, *strategy);
  if (!info.ok()) return info.status();
  absl::StatusOr<double> bound = ObliviousInformationBound(*inst, horizon);
  if (!bound.ok()) return bound.status();
  MiCheckResult r;
  r.d = d;
  r.horizon = horizon;
  r.delta = delta;
  r.channel = probs.empty() ? "uniform" : "skewed";
  r.information = *info;
  r.bound = *bound;
  r.passed = *info <= *bound;
  return r;
}

std::string FormatMiCheck(const MiCheckResult& r) {
  return absl::StrFormat(
      "d=%d T=%d delta=%.6g channel=%s sum_i I(V(i); Y^T)=%.9g nats "
      "bound=%.9g %s",
      r.d, r.horizon, r.delta, r.channel, r.information, r.bound,
      r.passed ? "PASS" : "FAIL");
}

ExperimentConfig PiStarRateConfig(uint64_t seed, int trials) {
  ExperimentConfig c = BaseConfig("pistar_rate", seed, trials);
  c.algorithms = {AlgorithmId::kPiStar};
  c.instance = InstanceParams{"gc_p12", 0.2, 1.0, 2.0, 1.0, 0.0};
  c.schedule = ScheduleParams{"normalized_constant", 3.0};
  c.grid.d = {64};
  c.grid.r = {1, 8, 64};
  c.grid.horizon = PowersOfTwo(10, 16, 1);
  return c;
}

ExperimentConfig RcdConvexConfig(uint64_t seed, int trials) {
  ExperimentConfig c = BaseConfig("rcd_convex", seed, trials);
  c.algorithms = {AlgorithmId::kRcd};
  c.instance = InstanceParams{"gc_p12", 1.0 / 6.0, 1.0, 2.0, 2.0, 0.0};
  c.schedule = ScheduleParams{"normalized_constant", 1.0};
  c.grid.d = {16, 64, 256};
  c.grid.horizon = PowersOfTwo(12, 18, 2);
  return c;
}

ExperimentConfig RcdStronglyConvexConfig(uint64_t seed, int trials) {
  ExperimentConfig c = BaseConfig("rcd_strongly_convex", seed, trials);
  c.algorithms = {AlgorithmId::kRcd};
  c.instance = InstanceParams{"gsc", 0.1, 1.0, 2.0, 2.0, 0.0};
  c.schedule = ScheduleParams{"strongly_convex", 1.0};
  c.grid.d = {16, 64, 256};
  c.grid.horizon = PowersOfTwo(12, 18, 2);
  return c;
}

ExperimentConfig LdpSgdConfig(uint64_t seed, int trials) {
  ExperimentConfig c = BaseConfig("ldp_sgd", seed, trials);
  c.algorithms = {AlgorithmId::kSgd};
  c.instance = InstanceParams{"gc_p12", 1.0 / 6.0, 1.0, 2.0, 2.0, 0.0};
  c.channel = ChannelParams{"ldp", {}};
  c.schedule = ScheduleParams{"normalized_constant", 1.0};
  c.grid.d = {16};
  c.grid.eps = {0.25, 1.0};
  c.grid.horizon = {int64_t{1} << 16};
  return c;
}

ExperimentConfig SeparationConfig(uint64_t seed, int trials) {
  ExperimentConfig c = BaseConfig("separation", seed, trials);
  c.kind = ExperimentKind::kSeparation;
  c.algorithms = {AlgorithmId::kAcd, AlgorithmId::kNonadaptive};
  c.instance.family = "block_sparse";
  c.instance.delta = 0.5;
  c.grid.d = {1024};
  c.grid.s = {32};
  c.grid.horizon = {64 * 1024};
  return c;
}

ExperimentConfig DeterminismSweepConfig(uint64_t seed) {
  ExperimentConfig c = LdpSgdConfig(seed, 20);
  c.id = "determinism_sweep";
  c.grid.eps = {0.5};
  c.grid.horizon = {1 << 10, 1 << 12, 1 << 14};
  return c;
}

CheckResult CheckPiStarRate(uint64_t seed, const RunOptions& options) {
  constexpr const char* kName = "pistar_rate";
  const ExperimentConfig config = PiStarRateConfig(seed, 100);
  absl::StatusOr<Table> table = RunTable(config, options);
  if (!table.ok()) return Fail(kName, std::string(table.status().message()));
  if (!table->failure.empty()) return Fail(kName, table->failure);
  bool ok = true;
  std::vector<std::string> parts;
  for (int r : config.grid.r) {
    absl::StatusOr<RateFit> fit = SlopeInT(*table, AlgorithmId::kPiStar, 64, r,
                                           config.grid.horizon);
    if (!fit.ok()) return Fail(kName, std::string(fit.status().message()));
    ok = ok && Within(fit->slope, -0.65, -0.35);
    parts.push_back(absl::StrFormat("slope(r=%d)=%.3f", r, fit->slope));
  }
  const int64_t t_max = config.grid.horizon.back();
  const double ratio =
      table->Find(AlgorithmId::kPiStar, 64, 1, 0.0, t_max)->mean_error /
      table->Find(AlgorithmId::kPiStar, 64, 64, 0.0, t_max)->mean_error;
  ok = ok && Within(ratio, 3.0, 20.0);
  parts.push_back(absl::StrFormat("err(r=1)/err(r=64)=%.3f at T=%d", ratio,
                                  t_max));
  return CheckResult{kName, ok,
                     absl::StrJoin(parts, " ") +
                         " (slopes in [-0.65,-0.35], ratio in [3,20])"};
}

CheckResult CheckRcdRates(uint64_t seed, const RunOptions& options) {
  constexpr const char* kName = "rcd_rates";
  struct Part {
    ExperimentConfig config;
    double slope_lo, slope_hi, exponent;
  };
  const Part parts[] = {
      {RcdConvexConfig(seed, 100), -0.65, -0.35, 0.5},
      {RcdStronglyConvexConfig(seed, 100), -1.25, -0.75, 1.0},
  };
  bool ok = true;
  std::vector<std::string> detail;
  for (const Part& part : parts) {
    const ExperimentConfig& config = part.config;
    absl::StatusOr<Table> table = RunTable(config, options);
    if (!table.ok()) return Fail(kName, std::string(table.status().message()));
    if (!table->failure.empty()) return Fail(kName, table->failure);
    std::vector<std::string> slopes;
    for (int d : config.grid.d) {
      absl::StatusOr<RateFit> fit =
          SlopeInT(*table, AlgorithmId::kRcd, d, 0, config.grid.horizon);
      if (!fit.ok()) return Fail(kName, std::string(fit.status().message()));
      ok = ok && Within(fit->slope, part.slope_lo, part.slope_hi);
      slopes.push_back(absl::StrFormat("%.3f", fit->slope));
    }
    const int64_t t_max = config.grid.horizon.back();
    std::vector<std::pair<double, double>> by_d;
    for (int d : config.grid.d) {
      by_d.emplace_back(
          d, table->Find(AlgorithmId::kRcd, d, 0, 0.0, t_max)->mean_error);
    }
    absl::StatusOr<RateFit> dfit = FitRate(by_d);
    if (!dfit.ok()) return Fail(kName, std::string(dfit.status().message()));
    ok = ok && std::abs(dfit->slope - part.exponent) <= 0.35;
    detail.push_back(absl::StrFormat(
        "%s: T-slopes(d=%s)=%s in [%g,%g], d-exponent=%.3f (want %.1f+-0.35)",
        config.id, absl::StrJoin(config.grid.d, "/"),
        absl::StrJoin(slopes, "/"), part.slope_lo, part.slope_hi, dfit->slope,
        part.exponent));
  }
  return CheckResult{kName, ok, absl::StrJoin(detail, "; ")};
}

CheckResult CheckLdpSgdScaling(uint64_t seed, const RunOptions& options) {
  constexpr const char* kName = "ldp_sgd_scaling";
  const ExperimentConfig config = LdpSgdConfig(seed, 100);
  absl::StatusOr<Table> table = RunTable(config, options);
  if (!table.ok()) return Fail(kName, std::string(table.status().message()));
  if (!table->failure.empty()) return Fail(kName, table->failure);
  const int64_t t = config.grid.horizon.front();
  const double lo = table->Find(AlgorithmId::kSgd, 16, 0, 0.25, t)->mean_error;
  const double hi = table->Find(AlgorithmId::kSgd, 16, 0, 1.0, t)->mean_error;
  const double ratio = lo / hi;
  return CheckResult{
      kName, Within(ratio, 2.0, 8.0),
      absl::StrFormat("err(eps=0.25)=%.5g err(eps=1)=%.5g ratio=%.3f (want "
                      "[2,8])",
                      lo, hi, ratio)};
}

CheckResult CheckSeparation(uint64_t seed, const RunOptions& options) {
  constexpr const char* kName = "separation";
  const ExperimentConfig config = SeparationConfig(seed, 100);
  absl::StatusOr<Table> table = RunTable(config, options);
  if (!table.ok()) return Fail(kName, std::string(table.status().message()));
  if (!table->failure.empty()) return Fail(kName, table->failure);
  const int d = config.grid.d.front();
  const int s = config.grid.s.front();
  const int64_t t = config.grid.horizon.front();
  const double acd = table->Find(AlgorithmId::kAcd, d, 0, 0.0, t)->mean_error;
  const double base =
      table->Find(AlgorithmId::kNonadaptive, d, 0, 0.0, t)->mean_error;
  const double bound = AcdErrorBound(d, s, t);
  return CheckResult{
      kName, acd <= bound && acd <= 0.5 * base,
      absl::StrFormat("acd=%.5g bound=%.5g nonadaptive=%.5g "
                      "(want acd <= bound and acd <= nonadaptive/2)",
                      acd, bound, base)};
}

CheckResult CheckInformationBound() {
  constexpr const char* kName = "information_bound";
  int cases = 0;
  double worst = 0.0;  // largest information / bound
  for (int d = 1; d <= 3; ++d) {
    for (int64_t t = 1; t <= 3; ++t) {
      for (double delta : {0.05, 0.1, 1.0 / 6.0}) {
        for (bool skewed : {false, true}) {
          absl::StatusOr<MiCheckResult> r = MiCheck(
              d, t, delta, skewed ? SkewedProbabilities(d)
                                  : std::vector<double>());
          if (!r.ok()) return Fail(kName, std::string(r.status().message()));
          if (!r->passed) return Fail(kName, FormatMiCheck(*r));
          worst = std::max(worst, r->information / r->bound);
          ++cases;
        }
      }
    }
  }
  return CheckResult{
      kName, true,
      absl::StrFormat("%d cases; max information/bound = %.4f", cases, worst)};
}

CheckResult CheckDeterminism(uint64_t seed) {
  constexpr const char* kName = "determinism";
  const std::string first = FormatReport(RunVerifySuite(seed));
  const std::string second = FormatReport(RunVerifySuite(seed));
  if (first != second) return Fail(kName, "verify report differs between runs");

  const ExperimentConfig config = DeterminismSweepConfig(seed);
  std::string csv[3];
  const int jobs[3] = {1, 1, 8};
  for (int k = 0; k < 3; ++k) {
    absl::StatusOr<std::vector<RunRecord>> records =
        RunExperiment(config, RunOptions{jobs[k], /*wall_time=*/false});
    if (!records.ok()) return Fail(kName, std::string(records.status().message()));
    std::ostringstream out;
    WriteCsv(*records, out);
    csv[k] = out.str();
  }
  if (csv[0] != csv[1]) return Fail(kName, "sweep CSV differs between runs");
  if (csv[0] != csv[2]) return Fail(kName, "sweep CSV differs at jobs=8");
  return CheckResult{
      kName, true,
      absl::StrFormat("verify report (%d bytes) repeated; sweep CSV (%d "
                      "bytes) identical at jobs 1, 1, 8",
                      static_cast<int>(first.size()),
                      static_cast<int>(csv[0].size()))};
}

}  // namespace infocon
