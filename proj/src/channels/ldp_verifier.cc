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

#include "infocon/channels/ldp_verifier.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "infocon/channels/ldp.h"

namespace infocon {

absl::Status CheckRowStochastic(const ChannelMatrix& channel, double tol) {
  if (channel.rows() == 0 || channel.cols() == 0) {
    return absl::InvalidArgumentError("channel matrix is empty");
  }
  for (Eigen::Index x = 0; x < channel.rows(); ++x) {
    double sum = 0.0;
    for (Eigen::Index y = 0; y < channel.cols(); ++y) {
      const double w = channel(x, y);
      if (!std::isfinite(w) || w < 0.0) {
        return absl::InvalidArgumentError(
            absl::StrFormat("entry (%d, %d) = %g is not a probability", x, y, w));
      }
      sum += w;
    }
    if (std::abs(sum - 1.0) > tol) {
      return absl::InvalidArgumentError(
          absl::StrFormat("row %d sums to %.17g, not 1", x, sum));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<double> VerifyLdp(const ChannelMatrix& channel) {
  if (absl::Status s = CheckRowStochastic(channel); !s.ok()) return s;
  double worst = 0.0;
  for (Eigen::Index y = 0; y < channel.cols(); ++y) {
    const double hi = channel.col(y).maxCoeff();
    const double lo = channel.col(y).minCoeff();
    if (hi == 0.0) continue;
    if (lo == 0.0) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, std::log(hi) - std::log(lo));
  }
  return worst;
}

ChannelMatrix RandomizedResponseMatrix(double eps) {
  const double keep = RrKeepProbability(eps);
  ChannelMatrix w(2, 2);
  w << keep, 1.0 - keep, 1.0 - keep, keep;
  return w;
}

absl::StatusOr<ChannelMatrix> LdpVectorMechanismMatrix(
    const std::vector<Vector>& inputs, double eps, double scale) {
  if (inputs.empty()) {
    return absl::InvalidArgumentError("input grid is empty");
  }
  if (std::isnan(eps) || eps < 0.0 || !(scale > 0.0)) {
    return absl::InvalidArgumentError("need eps >= 0 and scale > 0");
  }
  const Eigen::Index d = inputs.front().size();
  const double keep = RrKeepProbability(eps);
  ChannelMatrix w(static_cast<Eigen::Index>(inputs.size()), 2 * d);
  for (size_t x = 0; x < inputs.size(); ++x) {
    const Vector& g = inputs[x];
    if (g.size() != d) {
      return absl::InvalidArgumentError("inputs differ in dimension");
    }
    if (LpNorm(g, kInfinityNorm) > scale) {
      return absl::InvalidArgumentError(
          absl::StrFormat("input %d exceeds the LDP scale", x));
    }
    for (Eigen::Index j = 0; j < d; ++j) {
      const double up = (g[j] / scale + 1.0) / 2.0;
      const double out_plus = up * keep + (1.0 - up) * (1.0 - keep);
      w(x, 2 * j) = out_plus / d;
      w(x, 2 * j + 1) = (1.0 - out_plus) / d;
    }
  }
  return w;
}

absl::StatusOr<ChannelMatrix> ParseChannelMatrixCsv(absl::string_view text) {
  std::vector<std::vector<double>> rows;
  int line_no = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_no;
    line = absl::StripAsciiWhitespace(line);
    if (line.empty() || line.front() == '#') continue;
    std::vector<double> row;
    for (absl::string_view cell : absl::StrSplit(line, ',')) {
      double v;
      if (!absl::SimpleAtod(absl::StripAsciiWhitespace(cell), &v)) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "line %d: cannot parse '%s' as a number", line_no, cell));
      }
      row.push_back(v);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "line %d: expected %d columns, found %d", line_no,
          rows.front().size(), row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return absl::InvalidArgumentError("no rows in CSV");
  ChannelMatrix w(static_cast<Eigen::Index>(rows.size()),
                  static_cast<Eigen::Index>(rows.front().size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows[i].size(); ++j) w(i, j) = rows[i][j];
  }
  return w;
}

absl::StatusOr<ChannelMatrix> LoadChannelMatrixCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseChannelMatrixCsv(buffer.str());
}

}  // namespace infocon
