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

#ifndef INFOCON_ORACLES_INSTANCE_IO_H_
#define INFOCON_ORACLES_INSTANCE_IO_H_

#include <memory>
#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "infocon/oracles/oracle.h"

namespace infocon {

// JSON description of a hard instance.
//
//   {"family": "gc_p12" | "gc_pinf" | "gsc" | "block_sparse",
//    "d": int, "v": [...] or "v_seed": uint, "delta": real,
//    "theta", "a", "b": real (gsc), "B", "p", "b": real (gc_*),
//    "s": int (block_sparse)}
//
// Derived fields ("a" and "b" for gc_*, "B" for gsc) may be present and
// must then agree with the canonical parameterization to 1e-12 relative.
absl::StatusOr<std::unique_ptr<StochasticOracle>> OracleFromJson(
    absl::string_view json);

// Inverse of OracleFromJson for the four hard-instance families, always
// writing an explicit "v".
absl::StatusOr<std::string> OracleToJson(const StochasticOracle& oracle);

}  // namespace infocon

#endif  // INFOCON_ORACLES_INSTANCE_IO_H_
