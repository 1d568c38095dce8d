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

#ifndef INFOCON_CHANNELS_STRATEGY_H_
#define INFOCON_CHANNELS_STRATEGY_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "absl/status/statusor.h"
#include "infocon/channels/channel.h"
#include "infocon/core/rng.h"

namespace infocon {

using MessageHistory = std::vector<Message>;

// Maps (messages so far, 1-based step, rng) to the channel for this step.
using AdaptiveRule = std::function<absl::StatusOr<ChannelSpec>(
    const MessageHistory& history, int64_t t, RngStream& rng)>;

// Selects the channel applied at each of T steps.
//
// A nonadaptive strategy commits to its whole sequence up front; an
// adaptive one consults the history. Every returned spec is checked against
// the declared family.
class Strategy {
 public:
  static absl::StatusOr<Strategy> Nonadaptive(ChannelFamily family,
                                              std::vector<ChannelSpec> seq);
  // The same spec at each of `horizon` steps, stored once.
  static absl::StatusOr<Strategy> Fixed(ChannelFamily family, ChannelSpec spec,
                                        int64_t horizon);
  static absl::StatusOr<Strategy> Adaptive(ChannelFamily family,
                                           AdaptiveRule rule, int64_t horizon);

  bool adaptive() const { return rule_ != nullptr; }
  ChannelFamily family() const { return family_; }
  int64_t horizon() const { return horizon_; }

  // Channel for step t in [1, horizon].
  absl::StatusOr<ChannelSpec> Next(const MessageHistory& history, int64_t t,
                                   RngStream& rng) const;

 private:
  Strategy(ChannelFamily family, int64_t horizon)
      : family_(family), horizon_(horizon) {}

  ChannelFamily family_;
  int64_t horizon_;
  std::shared_ptr<const std::vector<ChannelSpec>> sequence_;
  std::shared_ptr<const AdaptiveRule> rule_;
};

}  // namespace infocon

#endif  // INFOCON_CHANNELS_STRATEGY_H_
