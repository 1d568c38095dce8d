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

#include "infocon/harness/csv.h"

#include <fstream>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"

namespace infocon {
std::string FormatRecord(const RunRecord& rec) {
  const GridPoint& p = rec.point;
  std::vector<std::string> fields = {
      rec.experiment_id,
      absl::StrCat(rec.trial),
      absl::StrCat(p.d),
      p.s.has_value() ? absl::StrCat(*p.s) : "",
      p.r.has_value() ? absl::StrCat(*p.r) : "",
      p.eps.has_value() ? absl::StrFormat("%.17g", *p.eps) : "",
      absl::StrCat(p.horizon),
      AlgorithmName(rec.algorithm),
      rec.channel,
      rec.ok() ? absl::StrFormat("%.17g", rec.final_error) : "",
      rec.ok() ? absl::StrCat(rec.bits_used) : "",
      absl::StrCat(rec.seed),
      rec.wall_time_ms.has_value() ? absl::StrFormat("%.3f", *rec.wall_time_ms)
                                   : "",
  };
  return absl::StrJoin(fields, ",");
}

void WriteCsv(const std::vector<RunRecord>& records, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const RunRecord& rec : records) out << FormatRecord(rec) << '\n';
}

absl::Status WriteCsvFile(const std::vector<RunRecord>& records,
                          const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrFormat("cannot open %s for writing", path));
  }
  WriteCsv(records, out);
  out.close();
  if (!out) return absl::DataLossError(absl::StrFormat("write to %s failed", path));
  return absl::OkStatus();
}

}  // namespace infocon
