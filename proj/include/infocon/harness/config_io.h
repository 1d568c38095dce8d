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

#ifndef INFOCON_HARNESS_CONFIG_IO_H_
#define INFOCON_HARNESS_CONFIG_IO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "infocon/harness/experiment.h"

namespace infocon {

enum class ConfigFormat { kJson, kToml };

// Parses an experiment description. Every error names `source` and, when
// the offending key or token can be located, its line, as in
// "sweep.toml:12: instance.delta: expected a number".
//
// Keys: id, kind, algorithm or algorithms, trials, seed, output,
// [instance] family delta B D p theta, [channel] kind probs,
// [schedule] kind value, [grid] d s r eps T. Unknown keys are errors.
// Physical parameters (delta, B, D, p, theta, eps, r, s and the schedule)
// have no defaults.
absl::StatusOr<ExperimentConfig> ParseConfig(std::string_view text,
                                             ConfigFormat format,
                                             std::string_view source);

// Reads `path`; the format follows the extension (.json or .toml).
absl::StatusOr<ExperimentConfig> LoadConfig(const std::string& path);

// Command-line replacements for single grid values and parameters.
struct ConfigOverrides {
  std::optional<uint64_t> seed;
  std::optional<int> trials;
  std::optional<int> d;
  std::optional<int> s;
  std::optional<int> r;
  std::optional<double> eps;
  std::optional<int64_t> horizon;
  std::optional<double> delta;
  std::optional<std::string> output;
};

void ApplyOverrides(const ConfigOverrides& overrides, ExperimentConfig* config);

}  // namespace infocon

#endif  // INFOCON_HARNESS_CONFIG_IO_H_
