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

#include "infocon/harness/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>
#include <utility>

#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "infocon/channels/channel.h"
#include "infocon/channels/ldp.h"
#include "infocon/channels/strategy.h"
#include "infocon/core/vector.h"
#include "infocon/optimizers/acd.h"
#include "infocon/optimizers/pistar.h"
#include "infocon/optimizers/rcd.h"
#include "infocon/optimizers/sgd.h"
#include "infocon/oracles/block_sparse.h"
#include "infocon/oracles/hard_instances.h"

namespace infocon {
namespace {

constexpr const char* kFamilies[] = {"gc_p12", "gc_pinf", "gsc",
                                     "block_sparse"};
constexpr const char* kChannels[] = {"identity", "ldp", "onebit", "oblivious"};
constexpr const char* kSchedules[] = {"constant", "inv_sqrt",
                                      "normalized_constant",
                                      "normalized_inv_sqrt", "strongly_convex"};

template <size_t N>
bool OneOf(const std::string& name, const char* const (&names)[N]) {
  return std::find_if(std::begin(names), std::end(names), [&](const char* n) {
           return name == n;
         }) != std::end(names);
}

bool IsConvexFamily(const std::string& family) {
  return family == "gc_p12" || family == "gc_pinf";
}

// Largest |sample(i)| and largest ||sample||_2.
struct SampleBounds {
  double linf = 0.0;
  double l2 = 0.0;
};

SampleBounds BoundsOf(const StochasticOracle& oracle) {
  const double root_d = std::sqrt(static_cast<double>(oracle.dimension()));
  if (const auto* gc = dynamic_cast<const ConvexHardInstance*>(&oracle)) {
    const bool single = gc->regime() == ConvexRegime::kPinf;
    return {gc->level(), single ? gc->level() : gc->level() * root_d};
  }
  if (const auto* gsc = dynamic_cast<const StronglyConvexInstance*>(&oracle)) {
    return {gsc->a() * gsc->b(), gsc->bound()};
  }
  return {oracle.bound(), oracle.bound() * root_d};
}

std::string ChannelLabel(const ExperimentConfig& config, AlgorithmId id) {
  switch (id) {
    case AlgorithmId::kSgd:
      return config.channel.kind;
    case AlgorithmId::kPiStar:
      return "onebit";
    default:
      return "oblivious";
  }
}

// Number of optimizer updates and the scale G of the decoded estimate.
struct StepScale {
  int64_t updates = 1;
  double g = 1.0;
};

absl::StatusOr<StepScale> ScaleFor(const ExperimentConfig& config,
                                   const GridPoint& point, AlgorithmId id,
                                   const StochasticOracle& oracle) {
  const SampleBounds bounds = BoundsOf(oracle);
  const double d = point.d;
  switch (id) {
    case AlgorithmId::kSgd: {
      const std::string& kind = config.channel.kind;
      if (kind == "identity") return StepScale{point.horizon, bounds.l2};
      if (kind == "ldp") {
        return StepScale{point.horizon,
                         d * bounds.linf * LdpUnbiasFactor(*point.eps)};
      }
      double min_p = 1.0 / d;
      if (!config.channel.probs.empty()) {
        min_p = *std::min_element(config.channel.probs.begin(),
                                  config.channel.probs.end());
      }
      return StepScale{point.horizon, bounds.linf / min_p};
    }
    case AlgorithmId::kRcd:
      return StepScale{point.horizon, d * bounds.linf};
    case AlgorithmId::kPiStar:
      return StepScale{point.horizon * *point.r / point.d, bounds.linf};
    default:
      return absl::InvalidArgumentError(
          absl::StrFormat("%s takes no step size", AlgorithmName(id)));
  }
}

absl::StatusOr<StepSchedule> MakeSchedule(const ExperimentConfig& config,
                                          const GridPoint& point,
                                          AlgorithmId id,
                                          const StochasticOracle& oracle) {
  const ScheduleParams& s = config.schedule;
  if (s.kind == "constant") return StepSchedule::Constant(s.value);
  if (s.kind == "inv_sqrt") return StepSchedule::InvSqrt(s.value);
  if (s.kind == "strongly_convex") {
    const auto* gsc = dynamic_cast<const StronglyConvexInstance*>(&oracle);
    if (gsc == nullptr) {
      return absl::InvalidArgumentError(
          "strongly_convex schedule needs the gsc family");
    }
    return StepSchedule::StronglyConvex(gsc->alpha());
  }
  absl::StatusOr<StepScale> scale = ScaleFor(config, point, id, oracle);
  if (!scale.ok()) return scale.status();
  const double base = s.value * config.instance.diameter / scale->g;
  if (s.kind == "normalized_constant") {
    return StepSchedule::Constant(
        base / std::sqrt(static_cast<double>(scale->updates)));
  }
  if (s.kind == "normalized_inv_sqrt") return StepSchedule::InvSqrt(base);
  return absl::InvalidArgumentError(
      absl::StrFormat("unknown schedule kind '%s'", s.kind));
}

absl::StatusOr<Strategy> SgdStrategy(const ExperimentConfig& config,
                                     const GridPoint& point,
                                     const StochasticOracle& oracle) {
  const std::string& kind = config.channel.kind;
  absl::StatusOr<ChannelSpec> spec;
  ChannelFamily family = ChannelFamily::kUnconstrained;
  if (kind == "identity") {
    spec = ChannelSpec::Identity(point.d);
  } else if (kind == "ldp") {
    family = ChannelFamily::kPrivacy;
    spec = ChannelSpec::Ldp(point.d, *point.eps, BoundsOf(oracle).linf);
  } else if (kind == "oblivious") {
    family = ChannelFamily::kOblivious;
    spec = config.channel.probs.empty()
               ? ChannelSpec::UniformOblivious(point.d)
               : ChannelSpec::Obliv(point.d, config.channel.probs);
  } else {
    return absl::InvalidArgumentError(
        absl::StrFormat("sgd does not support channel '%s'", kind));
  }
  if (!spec.ok()) return spec.status();
  return Strategy::Fixed(family, *std::move(spec), point.horizon);
}

// Runs one algorithm and returns (final error, bits used).
absl::StatusOr<std::pair<double, int64_t>> Execute(
    const ExperimentConfig& config, const GridPoint& point, AlgorithmId id,
    const StochasticOracle& oracle, RngStream& rng) {
  if (id == AlgorithmId::kAcd || id == AlgorithmId::kNonadaptive) {
    const auto& inst = static_cast<const BlockSparseInstance&>(oracle);
    absl::StatusOr<RunResult> r =
        id == AlgorithmId::kAcd
            ? AcdRun(inst, point.horizon, rng)
            : NonadaptiveBlockSparseRun(inst, point.horizon, rng);
    if (!r.ok()) return r.status();
    return std::make_pair(inst.SquaredError(r->output), r->total_bits);
  }

  OptConfig opt;
  opt.horizon = point.horizon;
  absl::StatusOr<StepSchedule> schedule =
      MakeSchedule(config, point, id, oracle);
  if (!schedule.ok()) return schedule.status();
  opt.schedule = *schedule;

  absl::StatusOr<RunResult> r;
  if (id == AlgorithmId::kSgd) {
    absl::StatusOr<Strategy> strategy = SgdStrategy(config, point, oracle);
    if (!strategy.ok()) return strategy.status();
    r = SgdRun(oracle, *strategy, opt, rng);
  } else if (id == AlgorithmId::kRcd) {
    r = RcdRun(oracle, opt, rng);
  } else {
    const auto& gc = static_cast<const ConvexHardInstance&>(oracle);
    opt.bits_per_query = *point.r;
    opt.quantizer_bound = BoundsOf(oracle).linf;
    absl::StatusOr<Domain> ball =
        Domain::L1Ball(point.d, config.instance.diameter / 2.0);
    if (!ball.ok()) return ball.status();
    opt.domain = *ball;
    r = PiStarRun(oracle, opt, rng);
    if (!r.ok()) return r.status();
    return std::make_pair(gc.AffineGap(r->output), r->total_bits);
  }
  if (!r.ok()) return r.status();
  absl::StatusOr<double> gap = oracle.Gap(r->output);
  if (!gap.ok()) return gap.status();
  return std::make_pair(*gap, r->total_bits);
}

RngStream TrialStream(uint64_t seed, int grid_index, int64_t trial) {
  return RngStream(seed, 0).Substream(static_cast<uint64_t>(grid_index),
                                      static_cast<uint64_t>(trial));
}

}  // namespace

const char* ExperimentKindName(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kRateSweep:
      return "rate_sweep";
    case ExperimentKind::kSeparation:
      return "separation";
    case ExperimentKind::kVerify:
      return "verify";
    case ExperimentKind::kMiCheck:
      return "mi_check";
  }
  return "?";
}

const char* AlgorithmName(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::kSgd:
      return "sgd";
    case AlgorithmId::kRcd:
      return "rcd";
    case AlgorithmId::kPiStar:
      return "pistar";
    case AlgorithmId::kAcd:
      return "acd";
    case AlgorithmId::kNonadaptive:
      return "nonadaptive";
  }
  return "?";
}

absl::StatusOr<ExperimentKind> ParseExperimentKind(const std::string& name) {
  for (ExperimentKind k :
       {ExperimentKind::kRateSweep, ExperimentKind::kSeparation,
        ExperimentKind::kVerify, ExperimentKind::kMiCheck}) {
    if (name == ExperimentKindName(k)) return k;
  }
  return absl::InvalidArgumentError(absl::StrFormat(
      "unknown experiment kind '%s' (rate_sweep, separation, verify, "
      "mi_check)",
      name));
}

absl::StatusOr<AlgorithmId> ParseAlgorithm(const std::string& name) {
  for (AlgorithmId id : {AlgorithmId::kSgd, AlgorithmId::kRcd,
                         AlgorithmId::kPiStar, AlgorithmId::kAcd,
                         AlgorithmId::kNonadaptive}) {
    if (name == AlgorithmName(id)) return id;
  }
  return absl::InvalidArgumentError(absl::StrFormat(
      "unknown algorithm '%s' (sgd, rcd, pistar, acd, nonadaptive)", name));
}

std::vector<GridPoint> ExpandGrid(const GridParams& grid) {
  auto or_none = [](const auto& values) {
    using T = typename std::decay_t<decltype(values)>::value_type;
    std::vector<std::optional<T>> out(values.begin(), values.end());
    if (out.empty()) out.push_back(std::nullopt);
    return out;
  };
  std::vector<GridPoint> points;
  for (int d : grid.d) {
    for (const auto& s : or_none(grid.s)) {
      for (const auto& r : or_none(grid.r)) {
        for (const auto& eps : or_none(grid.eps)) {
          for (int64_t t : grid.horizon) {
            GridPoint p;
            p.index = static_cast<int>(points.size());
            p.d = d;
            p.s = s;
            p.r = r;
            p.eps = eps;
            p.horizon = t;
            points.push_back(p);
          }
        }
      }
    }
  }
  return points;
}

absl::StatusOr<std::unique_ptr<StochasticOracle>> MakeInstance(
    const InstanceParams& params, const GridPoint& point, RngStream& rng) {
  const int d = point.d;
  if (d < 1) return absl::InvalidArgumentError("d must be >= 1");
  if (params.family == "block_sparse") {
    if (!point.s.has_value()) {
      return absl::InvalidArgumentError("block_sparse needs an s grid");
    }
    absl::StatusOr<BlockSparseInstance> inst =
        BlockSparseInstance::Random(d, *point.s, params.delta, rng);
    if (!inst.ok()) return inst.status();
    return std::make_unique<BlockSparseInstance>(*std::move(inst));
  }
  const Vector v = RandomSignVector(d, rng);
  if (IsConvexFamily(params.family)) {
    absl::StatusOr<ConvexHardInstance> inst = ConvexHardInstance::Create(
        v, params.delta, params.bound, params.diameter, params.p,
        params.family == "gc_p12" ? ConvexRegime::kP12 : ConvexRegime::kPinf);
    if (!inst.ok()) return inst.status();
    return std::make_unique<ConvexHardInstance>(*std::move(inst));
  }
  if (params.family == "gsc") {
    if (!(params.bound > 0.0) || !(params.diameter > 0.0)) {
      return absl::InvalidArgumentError("gsc needs B > 0 and D > 0");
    }
    // b = D / (2 sqrt(d)) makes the l2 diameter D; a = B / (sqrt(d) b)
    // makes the l2 gradient bound B.
    const double b = params.diameter / (2.0 * std::sqrt(static_cast<double>(d)));
    const double a = 2.0 * params.bound / params.diameter;
    absl::StatusOr<StronglyConvexInstance> inst =
        StronglyConvexInstance::Create(v, params.delta, params.theta, a, b);
    if (!inst.ok()) return inst.status();
    return std::make_unique<StronglyConvexInstance>(*std::move(inst));
  }
  return absl::InvalidArgumentError(absl::StrFormat(
      "unknown family '%s' (%s)", params.family, absl::StrJoin(kFamilies, ", ")));
}

absl::Status ValidateConfig(const ExperimentConfig& config) {
  auto fail = [](auto&&... args) {
    return absl::InvalidArgumentError(absl::StrFormat(args...));
  };
  if (config.id.empty()) return fail("experiment id is empty");
  if (config.kind != ExperimentKind::kRateSweep &&
      config.kind != ExperimentKind::kSeparation) {
    return fail("kind %s has no trial grid", ExperimentKindName(config.kind));
  }
  if (config.trials < 1) return fail("trials must be >= 1, got %d", config.trials);
  if (config.algorithms.empty()) return fail("no algorithm given");
  if (config.grid.d.empty()) return fail("grid.d is empty");
  if (config.grid.horizon.empty()) return fail("grid.T is empty");
  if (!OneOf(config.instance.family, kFamilies)) {
    return fail("unknown family '%s' (%s)", config.instance.family,
                absl::StrJoin(kFamilies, ", "));
  }
  const bool block = config.instance.family == "block_sparse";
  bool needs_schedule = false;
  for (AlgorithmId id : config.algorithms) {
    const bool block_algo =
        id == AlgorithmId::kAcd || id == AlgorithmId::kNonadaptive;
    if (block != block_algo) {
      return fail("algorithm %s does not run on family %s", AlgorithmName(id),
                  config.instance.family);
    }
    if (id == AlgorithmId::kPiStar && !IsConvexFamily(config.instance.family)) {
      return fail("pistar needs a gc family");
    }
    if (id == AlgorithmId::kPiStar && config.grid.r.empty()) {
      return fail("pistar needs an r grid");
    }
    if (id == AlgorithmId::kSgd) {
      const std::string& kind = config.channel.kind;
      if (!OneOf(kind, kChannels)) {
        return fail("unknown channel '%s' (%s)", kind,
                    absl::StrJoin(kChannels, ", "));
      }
      if (kind == "onebit") {
        return fail("sgd supports identity, ldp and oblivious channels");
      }
      if (kind == "ldp" && config.grid.eps.empty()) {
        return fail("the ldp channel needs an eps grid");
      }
    }
    needs_schedule = needs_schedule || !block_algo;
  }
  if (needs_schedule) {
    if (!OneOf(config.schedule.kind, kSchedules)) {
      return fail("unknown schedule '%s' (%s)", config.schedule.kind,
                  absl::StrJoin(kSchedules, ", "));
    }
    if (config.schedule.kind != "strongly_convex" &&
        !(config.schedule.value > 0.0 && std::isfinite(config.schedule.value))) {
      return fail("schedule value must be positive, got %g",
                  config.schedule.value);
    }
    if (config.schedule.kind == "strongly_convex" &&
        (config.instance.family != "gsc" || config.instance.theta >= 1.0)) {
      return fail("strongly_convex schedule needs family gsc with theta < 1");
    }
  }
  for (double eps : config.grid.eps) {
    if (!(eps > 0.0) || std::isinf(eps)) {
      return fail("eps must be positive and finite, got %g", eps);
    }
  }
  for (int64_t t : config.grid.horizon) {
    if (t < 1) return fail("T must be >= 1, got %d", t);
  }

  for (const GridPoint& point : ExpandGrid(config.grid)) {
    const std::string where = absl::StrFormat(
        "grid cell %d (d=%d, T=%d)", point.index, point.d, point.horizon);
    RngStream rng(0, 0);
    absl::StatusOr<std::unique_ptr<StochasticOracle>> oracle =
        MakeInstance(config.instance, point, rng);
    if (!oracle.ok()) {
      return fail("%s: %s", where, oracle.status().message());
    }
    if (!config.channel.probs.empty() &&
        static_cast<int>(config.channel.probs.size()) != point.d) {
      return fail("%s: %d channel probabilities for d = %d", where,
                  config.channel.probs.size(), point.d);
    }
    for (AlgorithmId id : config.algorithms) {
      absl::Status s;
      switch (id) {
        case AlgorithmId::kPiStar:
          s = ValidatePiStarShape(point.d, *point.r, point.horizon);
          break;
        case AlgorithmId::kAcd:
          s = ValidateAcdShape(point.d, *point.s, point.horizon);
          break;
        case AlgorithmId::kNonadaptive:
          s = ValidateNonadaptiveShape(point.d, *point.s, point.horizon);
          break;
        default:
          break;
      }
      if (s.ok() && id == AlgorithmId::kSgd) {
        s = SgdStrategy(config, point, **oracle).status();
      }
      if (s.ok() && (id == AlgorithmId::kSgd || id == AlgorithmId::kRcd ||
                     id == AlgorithmId::kPiStar)) {
        s = MakeSchedule(config, point, id, **oracle).status();
      }
      if (!s.ok()) {
        return fail("%s, %s: %s", where, AlgorithmName(id), s.message());
      }
    }
  }
  return absl::OkStatus();
}

RunRecord RunTrial(const ExperimentConfig& config, const GridPoint& point,
                   int algorithm_index, int64_t trial, bool wall_time) {
  const AlgorithmId id = config.algorithms[algorithm_index];
  RunRecord rec;
  rec.experiment_id = config.id;
  rec.grid_index = point.index;
  rec.algorithm = id;
  rec.trial = trial;
  rec.point = point;
  rec.channel = ChannelLabel(config, id);
  rec.seed = config.seed;

  const auto start = std::chrono::steady_clock::now();
  RngStream stream = TrialStream(config.seed, point.index, trial);
  RngStream instance_rng = stream.Substream(0);
  RngStream run_rng = stream.Substream(1 + static_cast<uint64_t>(algorithm_index));
  absl::StatusOr<std::unique_ptr<StochasticOracle>> oracle =
      MakeInstance(config.instance, point, instance_rng);
  absl::StatusOr<std::pair<double, int64_t>> out =
      oracle.ok() ? Execute(config, point, id, **oracle, run_rng)
                  : absl::StatusOr<std::pair<double, int64_t>>(oracle.status());
  if (out.ok()) {
    rec.final_error = out->first;
    rec.bits_used = out->second;
  } else {
    rec.failure = std::string(out.status().message());
  }
  if (wall_time) {
    rec.wall_time_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  }
  return rec;
}

absl::StatusOr<std::vector<RunRecord>> RunExperiment(
    const ExperimentConfig& config, const RunOptions& options) {
  if (absl::Status s = ValidateConfig(config); !s.ok()) return s;
  if (options.jobs < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("jobs must be >= 1, got %d", options.jobs));
  }
  const std::vector<GridPoint> points = ExpandGrid(config.grid);
  const size_t algos = config.algorithms.size();
  const size_t trials = static_cast<size_t>(config.trials);
  const size_t total = points.size() * algos * trials;
  std::vector<RunRecord> records(total);

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t task = next++; task < total; task = next++) {
      const size_t trial = task % trials;
      const size_t algo = (task / trials) % algos;
      const size_t cell = task / (trials * algos);
      records[task] = RunTrial(config, points[cell], static_cast<int>(algo),
                               static_cast<int64_t>(trial), options.wall_time);
    }
  };
  const int threads =
      static_cast<int>(std::min<size_t>(options.jobs, std::max<size_t>(total, 1)));
  std::vector<std::thread> pool;
  for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return records;
}

std::vector<CellSummary> Summarize(const std::vector<RunRecord>& records) {
  std::vector<CellSummary> out;
  std::vector<double> sum_sq;
  for (const RunRecord& rec : records) {
    if (out.empty() || out.back().point.index != rec.grid_index ||
        out.back().algorithm != rec.algorithm) {
      CellSummary cell;
      cell.point = rec.point;
      cell.algorithm = rec.algorithm;
      cell.channel = rec.channel;
      out.push_back(cell);
      sum_sq.push_back(0.0);
    }
    CellSummary& cell = out.back();
    if (!rec.ok()) {
      ++cell.failures;
      continue;
    }
    ++cell.trials;
    cell.mean_error += rec.final_error;
    cell.mean_bits += static_cast<double>(rec.bits_used);
    sum_sq.back() += rec.final_error * rec.final_error;
  }
  for (size_t k = 0; k < out.size(); ++k) {
    CellSummary& cell = out[k];
    if (cell.trials == 0) continue;
    const double n = static_cast<double>(cell.trials);
    cell.mean_error /= n;
    cell.mean_bits /= n;
    if (cell.trials > 1) {
      const double var =
          std::max(0.0, (sum_sq[k] - n * cell.mean_error * cell.mean_error) /
                            (n - 1.0));
      cell.standard_error = std::sqrt(var / n);
    }
  }
  return out;
}

}  // namespace infocon
