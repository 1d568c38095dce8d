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

#ifndef INFOCON_HARNESS_EXPERIMENT_H_
#define INFOCON_HARNESS_EXPERIMENT_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "infocon/core/rng.h"
#include "infocon/oracles/oracle.h"

namespace infocon {

enum class ExperimentKind { kRateSweep, kSeparation, kVerify, kMiCheck };
enum class AlgorithmId { kSgd, kRcd, kPiStar, kAcd, kNonadaptive };

const char* ExperimentKindName(ExperimentKind kind);
const char* AlgorithmName(AlgorithmId id);
absl::StatusOr<ExperimentKind> ParseExperimentKind(const std::string& name);
absl::StatusOr<AlgorithmId> ParseAlgorithm(const std::string& name);

// Oracle family and its physical parameters. Sign vectors and block
// positions are drawn per trial.
struct InstanceParams {
  std::string family;  // gc_p12, gc_pinf, gsc or block_sparse
  double delta = 0.0;
  double bound = 1.0;  // B
  double diameter = 1.0;  // D
  double p = 2.0;  // gc families only
  double theta = 0.0;  // gsc only
};

struct ChannelParams {
  std::string kind;  // identity, ldp, onebit or oblivious
  // Oblivious sampling probabilities; empty means uniform.
  std::vector<double> probs;
};

// Step-size rule. The normalized kinds scale by D / G, where G bounds the
// decoded gradient estimate in the dual norm of the geometry, and by the
// number N of optimizer updates (T, or T r / d phases for the permuted
// one-bit scheme):
//   constant             eta = value
//   inv_sqrt             eta_t = value / sqrt(t)
//   normalized_constant  eta = value D / (G sqrt(N))
//   normalized_inv_sqrt  eta_t = value D / (G sqrt(t))
//   strongly_convex      eta_t = 2 / (alpha (t + 1)), alpha of the instance
struct ScheduleParams {
  std::string kind;
  double value = 1.0;
};

// Cartesian grid. Empty lists mean the parameter does not apply.
struct GridParams {
  std::vector<int> d;
  std::vector<int> s;
  std::vector<int> r;
  std::vector<double> eps;
  std::vector<int64_t> horizon;
};

struct ExperimentConfig {
  std::string id;
  ExperimentKind kind = ExperimentKind::kRateSweep;
  std::vector<AlgorithmId> algorithms;
  InstanceParams instance;
  ChannelParams channel;
  ScheduleParams schedule;
  GridParams grid;
  int trials = 1;
  uint64_t seed = 0;
  std::string output;  // CSV path; empty means stdout
};

// One cell of the grid. Unused fields are empty.
struct GridPoint {
  int index = 0;
  int d = 0;
  std::optional<int> s;
  std::optional<int> r;
  std::optional<double> eps;
  int64_t horizon = 0;
};

struct RunRecord {
  std::string experiment_id;
  int grid_index = 0;
  AlgorithmId algorithm = AlgorithmId::kSgd;
  int64_t trial = 0;
  GridPoint point;
  std::string channel;
  double final_error = 0.0;
  int64_t bits_used = 0;
  uint64_t seed = 0;
  std::optional<double> wall_time_ms;
  // Set when the trial aborted; the numeric fields are then meaningless.
  std::string failure;

  bool ok() const { return failure.empty(); }
};

// Grid cells in row-major order of (d, s, r, eps, T).
std::vector<GridPoint> ExpandGrid(const GridParams& grid);

// Checks every range and divisibility constraint of every grid cell.
absl::Status ValidateConfig(const ExperimentConfig& config);

struct RunOptions {
  int jobs = 1;
  bool wall_time = true;
};

// Runs every (grid cell, algorithm, trial). Trial k of cell g draws its
// instance from stream (seed, 0) -> (g, k) -> 0 and runs algorithm j on
// (g, k) -> 1 + j, so records do not depend on the execution order or on
// `options.jobs`. Records come back sorted by (cell, algorithm, trial).
absl::StatusOr<std::vector<RunRecord>> RunExperiment(
    const ExperimentConfig& config, const RunOptions& options = {});

// One trial, exactly as RunExperiment would run it.
RunRecord RunTrial(const ExperimentConfig& config, const GridPoint& point,
                   int algorithm_index, int64_t trial, bool wall_time);

// Mean final error over the successful trials of one (cell, algorithm).
struct CellSummary {
  GridPoint point;
  AlgorithmId algorithm = AlgorithmId::kSgd;
  std::string channel;
  int64_t trials = 0;
  int64_t failures = 0;
  double mean_error = 0.0;
  double standard_error = 0.0;
  double mean_bits = 0.0;
};

// Groups sorted records by (cell, algorithm) in order of appearance.
std::vector<CellSummary> Summarize(const std::vector<RunRecord>& records);

// Draws the trial's instance for `point` from `rng`.
absl::StatusOr<std::unique_ptr<StochasticOracle>> MakeInstance(
    const InstanceParams& params, const GridPoint& point, RngStream& rng);

}  // namespace infocon

#endif  // INFOCON_HARNESS_EXPERIMENT_H_
