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

#include "infocon/harness/cli.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "absl/strings/str_format.h"
#include "infocon/harness/config_io.h"
#include "infocon/harness/csv.h"
#include "infocon/harness/experiment.h"
#include "infocon/harness/suites.h"
#include "infocon/harness/verify.h"
#include "infocon/optimizers/acd.h"

namespace infocon {
namespace {

struct Flags {
  std::string config;
  std::string out;
  std::string suite;
  int jobs = 0;
  bool no_wall_time = false;
  bool skewed = false;
  uint64_t seed = 0;
  int trials = 0;
  int d = 0;
  int s = 0;
  int r = 0;
  double eps = 0.0;
  int64_t horizon = 0;
  double delta = 0.0;
  // Every subcommand registers its own option objects under a shared name.
  std::multimap<std::string, CLI::Option*> given;

  void Track(const std::string& name, CLI::Option* option) {
    given.emplace(name, option);
  }

  bool Has(const std::string& name) const {
    auto [lo, hi] = given.equal_range(name);
    for (auto it = lo; it != hi; ++it) {
      if (it->second->count() > 0) return true;
    }
    return false;
  }

  ConfigOverrides Overrides() const {
    ConfigOverrides o;
    if (Has("seed")) o.seed = seed;
    if (Has("trials")) o.trials = trials;
    if (Has("d")) o.d = d;
    if (Has("s")) o.s = s;
    if (Has("r")) o.r = r;
    if (Has("eps")) o.eps = eps;
    if (Has("T")) o.horizon = horizon;
    if (Has("delta")) o.delta = delta;
    if (Has("out")) o.output = out;
    return o;
  }

  RunOptions Options() const {
    RunOptions o;
    o.jobs = jobs > 0 ? jobs
                      : static_cast<int>(
                            std::max(1u, std::thread::hardware_concurrency()));
    o.wall_time = !no_wall_time;
    return o;
  }
};

void AddCommon(CLI::App* sub, Flags* f) {
  f->Track("seed", sub->add_option("--seed", f->seed, "Base seed"));
  f->Track("out", sub->add_option("--out", f->out,
                                  "Output path (CSV or report)"));
}

void AddRunFlags(CLI::App* sub, Flags* f) {
  AddCommon(sub, f);
  sub->add_option("--config", f->config, "Experiment config (.json or .toml)");
  sub->add_option("--jobs", f->jobs, "Worker threads (default: all cores)")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--no-wall-time", f->no_wall_time,
                "Leave wall_time_ms empty so output is byte-stable");
  f->Track("trials",
           sub->add_option("--trials", f->trials, "Trials per cell"));
  f->Track("d", sub->add_option("--d", f->d, "Dimension"));
  f->Track("s", sub->add_option("--s", f->s, "Block size"));
  f->Track("r", sub->add_option("--r", f->r, "Bits per query"));
  f->Track("eps", sub->add_option("--eps", f->eps, "Privacy level"));
  f->Track("T", sub->add_option("--T", f->horizon, "Horizon"));
  f->Track("delta", sub->add_option("--delta", f->delta, "Instance bias"));
}

absl::StatusOr<ExperimentConfig> CannedSuite(const std::string& name,
                                             uint64_t seed) {
  if (name == "pistar_rate") return PiStarRateConfig(seed, 100);
  if (name == "rcd_convex") return RcdConvexConfig(seed, 100);
  if (name == "rcd_strongly_convex") return RcdStronglyConvexConfig(seed, 100);
  if (name == "ldp_sgd") return LdpSgdConfig(seed, 100);
  if (name == "separation") return SeparationConfig(seed, 100);
  if (name == "determinism") return DeterminismSweepConfig(seed);
  return absl::InvalidArgumentError(absl::StrFormat(
      "unknown suite '%s' (pistar_rate, rcd_convex, rcd_strongly_convex, "
      "ldp_sgd, separation, determinism)",
      name));
}

absl::Status WriteText(const std::string& text, const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) return absl::NotFoundError(absl::StrFormat("%s: cannot open", path));
  file << text;
  file.close();
  if (!file) return absl::DataLossError(absl::StrFormat("%s: write failed", path));
  return absl::OkStatus();
}

int Verify(uint64_t seed, const std::string& out_path, std::ostream& out,
           std::ostream& err) {
  const std::vector<CheckResult> results = RunVerifySuite(seed);
  const std::string report = FormatReport(results);
  out << report;
  if (!out_path.empty()) {
    if (absl::Status s = WriteText(report, out_path); !s.ok()) {
      err << "error: " << s.message() << "\n";
      return kExitConfigError;
    }
  }
  return AllPassed(results) ? kExitPass : kExitCheckFailed;
}

// The full grid for the config's deltas, dims and horizons; each line ends
// in PASS or FAIL.
int MiCheckGrid(const std::vector<int>& dims,
                const std::vector<int64_t>& horizons, double delta,
                const std::vector<std::string>& samplers, std::ostream& out,
                std::ostream& err) {
  bool ok = true;
  for (int d : dims) {
    for (int64_t t : horizons) {
      for (const std::string& sampler : samplers) {
        absl::StatusOr<MiCheckResult> r =
            MiCheck(d, t, delta,
                    sampler == "skewed" ? SkewedProbabilities(d)
                                        : std::vector<double>());
        if (!r.ok()) {
          err << "error: " << r.status().message() << "\n";
          return kExitConfigError;
        }
        out << FormatMiCheck(*r) << "\n";
        ok = ok && r->passed;
      }
    }
  }
  return ok ? kExitPass : kExitCheckFailed;
}

void PrintSummary(const std::vector<RunRecord>& records, std::ostream& out) {
  for (const CellSummary& c : Summarize(records)) {
    std::string axes = absl::StrFormat("d=%d", c.point.d);
    if (c.point.s) absl::StrAppendFormat(&axes, " s=%d", *c.point.s);
    if (c.point.r) absl::StrAppendFormat(&axes, " r=%d", *c.point.r);
    if (c.point.eps) absl::StrAppendFormat(&axes, " eps=%g", *c.point.eps);
    out << absl::StrFormat(
        "%-11s %s T=%d trials=%d failed=%d mean_error=%.6g se=%.3g "
        "mean_bits=%.6g\n",
        AlgorithmName(c.algorithm), axes, c.point.horizon, c.trials,
        c.failures, c.mean_error, c.standard_error, c.mean_bits);
  }
}

// Runs a grid experiment and writes its CSV. With no output path the CSV
// goes to `out` and the summary to `err`.
int RunGrid(const ExperimentConfig& config, const RunOptions& options,
            std::ostream& out, std::ostream& err,
            std::vector<RunRecord>* kept = nullptr) {
  absl::StatusOr<std::vector<RunRecord>> records =
      RunExperiment(config, options);
  if (!records.ok()) {
    err << "error: " << records.status().message() << "\n";
    return kExitConfigError;
  }
  if (config.output.empty()) {
    WriteCsv(*records, out);
    PrintSummary(*records, err);
  } else {
    if (absl::Status s = WriteCsvFile(*records, config.output); !s.ok()) {
      err << "error: " << s.message() << "\n";
      return kExitConfigError;
    }
    PrintSummary(*records, out);
    out << "wrote " << records->size() << " rows to " << config.output << "\n";
  }
  int failed = 0;
  for (const RunRecord& r : *records) failed += !r.ok();
  if (failed > 0) {
    err << failed << " trial(s) failed; see the CSV rows with empty "
        << "final_error\n";
    return kExitCheckFailed;
  }
  if (kept != nullptr) *kept = *std::move(records);
  return kExitPass;
}

int RunConfig(ExperimentConfig config, const Flags& flags, std::ostream& out,
              std::ostream& err) {
  ApplyOverrides(flags.Overrides(), &config);
  switch (config.kind) {
    case ExperimentKind::kVerify:
      return Verify(config.seed, config.output, out, err);
    case ExperimentKind::kMiCheck: {
      std::vector<std::string> samplers = {"uniform", "skewed"};
      if (!config.channel.kind.empty()) samplers = {config.channel.kind};
      return MiCheckGrid(config.grid.d, config.grid.horizon,
                         config.instance.delta, samplers, out, err);
    }
    default:
      break;
  }
  if (absl::Status s = ValidateConfig(config); !s.ok()) {
    err << "error: " << s.message() << "\n";
    return kExitConfigError;
  }
  return RunGrid(config, flags.Options(), out, err);
}

absl::StatusOr<ExperimentConfig> LoadFromFlags(const Flags& flags) {
  if (!flags.config.empty() && !flags.suite.empty()) {
    return absl::InvalidArgumentError("give --config or --suite, not both");
  }
  if (!flags.suite.empty()) return CannedSuite(flags.suite, flags.seed);
  if (flags.config.empty()) {
    return absl::InvalidArgumentError("--config PATH is required");
  }
  return LoadConfig(flags.config);
}

int Separation(const Flags& flags, std::ostream& out, std::ostream& err) {
  ExperimentConfig config = SeparationConfig(flags.seed, 100);
  if (!flags.config.empty()) {
    absl::StatusOr<ExperimentConfig> loaded = LoadConfig(flags.config);
    if (!loaded.ok()) {
      err << "error: " << loaded.status().message() << "\n";
      return kExitConfigError;
    }
    if (loaded->kind != ExperimentKind::kSeparation) {
      err << "error: " << flags.config << ": kind must be separation\n";
      return kExitConfigError;
    }
    config = *std::move(loaded);
  }
  ApplyOverrides(flags.Overrides(), &config);
  if (absl::Status s = ValidateConfig(config); !s.ok()) {
    err << "error: " << s.message() << "\n";
    return kExitConfigError;
  }
  std::vector<RunRecord> records;
  const int code = RunGrid(config, flags.Options(), out, err, &records);
  if (code != kExitPass) return code;

  std::map<int, std::pair<double, double>> by_cell;  // acd, nonadaptive
  std::map<int, GridPoint> points;
  for (const CellSummary& c : Summarize(records)) {
    points[c.point.index] = c.point;
    if (c.algorithm == AlgorithmId::kAcd) by_cell[c.point.index].first = c.mean_error;
    if (c.algorithm == AlgorithmId::kNonadaptive) {
      by_cell[c.point.index].second = c.mean_error;
    }
  }
  bool ok = true;
  std::ostream& report = config.output.empty() ? err : out;
  for (const auto& [index, errs] : by_cell) {
    const GridPoint& p = points[index];
    const double bound = AcdErrorBound(p.d, *p.s, p.horizon);
    const bool pass = errs.first <= bound && errs.first <= 0.5 * errs.second;
    ok = ok && pass;
    report << absl::StrFormat(
        "d=%d s=%d T=%d acd=%.6g bound=%.6g nonadaptive=%.6g %s\n", p.d, *p.s,
        p.horizon, errs.first, bound, errs.second, pass ? "PASS" : "FAIL");
  }
  return ok ? kExitPass : kExitCheckFailed;
}

}  // namespace

int CliMain(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Stochastic optimization under local information constraints"};
  app.require_subcommand(1);
  Flags flags;

  CLI::App* verify = app.add_subcommand("verify", "Run the property suite");
  AddCommon(verify, &flags);

  CLI::App* run = app.add_subcommand("run", "Run one configured experiment");
  AddRunFlags(run, &flags);

  CLI::App* sweep =
      app.add_subcommand("sweep", "Run a rate sweep from a config or suite");
  AddRunFlags(sweep, &flags);
  sweep->add_option("--suite", flags.suite,
                    "Canned sweep: pistar_rate, rcd_convex, "
                    "rcd_strongly_convex, ldp_sgd, separation, determinism");

  CLI::App* separation = app.add_subcommand(
      "separation", "ACD against the nonadaptive baseline");
  AddRunFlags(separation, &flags);

  CLI::App* mi = app.add_subcommand("mi-check", "Exact information bound");
  mi->add_option("--config", flags.config, "mi_check config");
  flags.Track("d", mi->add_option("--d", flags.d, "Dimension (1..3)"));
  flags.Track("T", mi->add_option("--T", flags.horizon, "Horizon (1..3)"));
  flags.Track("delta", mi->add_option("--delta", flags.delta, "Bias"));
  mi->add_flag("--skewed", flags.skewed, "Use the skewed sampler");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitPass : kExitConfigError;
  }

  if (verify->parsed()) return Verify(flags.seed, flags.out, out, err);

  if (run->parsed() || sweep->parsed()) {
    absl::StatusOr<ExperimentConfig> config = LoadFromFlags(flags);
    if (!config.ok()) {
      err << "error: " << config.status().message() << "\n";
      return kExitConfigError;
    }
    if (sweep->parsed() && config->kind != ExperimentKind::kRateSweep &&
        config->kind != ExperimentKind::kSeparation) {
      err << "error: sweep needs a rate_sweep or separation config\n";
      return kExitConfigError;
    }
    return RunConfig(*std::move(config), flags, out, err);
  }

  if (separation->parsed()) return Separation(flags, out, err);

  // mi-check
  if (!flags.config.empty()) {
    absl::StatusOr<ExperimentConfig> config = LoadConfig(flags.config);
    if (!config.ok()) {
      err << "error: " << config.status().message() << "\n";
      return kExitConfigError;
    }
    if (config->kind != ExperimentKind::kMiCheck) {
      err << "error: " << flags.config << ": kind must be mi_check\n";
      return kExitConfigError;
    }
    return RunConfig(*std::move(config), flags, out, err);
  }
  if (!flags.Has("delta")) {
    err << "error: mi-check needs --delta or --config\n";
    return kExitConfigError;
  }
  std::vector<int> dims = {1, 2, 3};
  std::vector<int64_t> horizons = {1, 2, 3};
  if (flags.Has("d")) dims = {flags.d};
  if (flags.Has("T")) horizons = {flags.horizon};
  return MiCheckGrid(dims, horizons, flags.delta,
                     {flags.skewed ? "skewed" : "uniform"}, out, err);
}

}  // namespace infocon
