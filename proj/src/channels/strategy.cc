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

#include "infocon/channels/strategy.h"

#include "absl/strings/str_cat.h"

namespace infocon {
namespace {

absl::Status CheckFamily(ChannelFamily family, const ChannelSpec& spec) {
  if (spec.family() != family) {
    return absl::InvalidArgumentError(absl::StrCat(
        "strategy declared family '", ChannelFamilyName(family),
        "' but produced a '", ChannelFamilyName(spec.family()), "' channel"));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<Strategy> Strategy::Nonadaptive(ChannelFamily family,
                                               std::vector<ChannelSpec> seq) {
  if (seq.empty()) {
    return absl::InvalidArgumentError("nonadaptive sequence is empty");
  }
  for (const ChannelSpec& spec : seq) {
    if (absl::Status s = CheckFamily(family, spec); !s.ok()) return s;
  }
  Strategy s(family, static_cast<int64_t>(seq.size()));
  s.sequence_ = std::make_shared<const std::vector<ChannelSpec>>(std::move(seq));
  return s;
}

absl::StatusOr<Strategy> Strategy::Fixed(ChannelFamily family,
                                         ChannelSpec spec, int64_t horizon) {
  if (horizon < 1) {
    return absl::InvalidArgumentError("horizon must be >= 1");
  }
  if (absl::Status st = CheckFamily(family, spec); !st.ok()) return st;
  Strategy s(family, horizon);
  s.sequence_ = std::make_shared<const std::vector<ChannelSpec>>(
      std::vector<ChannelSpec>{std::move(spec)});
  return s;
}

absl::StatusOr<Strategy> Strategy::Adaptive(ChannelFamily family,
                                            AdaptiveRule rule,
                                            int64_t horizon) {
  if (horizon < 1) {
    return absl::InvalidArgumentError("horizon must be >= 1");
  }
  if (!rule) return absl::InvalidArgumentError("adaptive rule is empty");
  Strategy s(family, horizon);
  s.rule_ = std::make_shared<const AdaptiveRule>(std::move(rule));
  return s;
}

absl::StatusOr<ChannelSpec> Strategy::Next(const MessageHistory& history,
                                           int64_t t, RngStream& rng) const {
  if (t < 1 || t > horizon_) {
    return absl::OutOfRangeError(
        absl::StrCat("step ", t, " outside [1, ", horizon_, "]"));
  }
  if (rule_ == nullptr) {
    const std::vector<ChannelSpec>& seq = *sequence_;
    return seq.size() == 1 ? seq.front() : seq[t - 1];
  }
  absl::StatusOr<ChannelSpec> spec = (*rule_)(history, t, rng);
  if (!spec.ok()) return spec.status();
  if (absl::Status s = CheckFamily(family_, *spec); !s.ok()) return s;
  return spec;
}

}  // namespace infocon
