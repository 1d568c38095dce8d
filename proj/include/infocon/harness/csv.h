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

#ifndef INFOCON_HARNESS_CSV_H_
#define INFOCON_HARNESS_CSV_H_

#include <ostream>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "infocon/harness/experiment.h"

namespace infocon {

inline constexpr char kCsvHeader[] =
    "experiment_id,trial,d,s,r,eps,T,algorithm,channel,final_error,bits_used,"
    "seed,wall_time_ms";

// One CSV line without the newline. Fields that do not apply, and the
// numeric results of failed trials, are empty. Errors use %.17g so a row
// round-trips exactly.
std::string FormatRecord(const RunRecord& record);

void WriteCsv(const std::vector<RunRecord>& records, std::ostream& out);

// Writes to `path`, replacing any existing file.
absl::Status WriteCsvFile(const std::vector<RunRecord>& records,
                          const std::string& path);

}  // namespace infocon

#endif  // INFOCON_HARNESS_CSV_H_
