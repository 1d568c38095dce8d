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

#ifndef INFOCON_CHANNELS_CHANNEL_H_
#define INFOCON_CHANNELS_CHANNEL_H_

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "infocon/core/rng.h"
#include "infocon/core/vector.h"

namespace infocon {

// No constraint: the full vector passes through.
struct IdentityChannel {};

// Coordinate sampling, sign rounding at scale G, and binary randomized
// response with privacy budget eps.
struct LdpCoordRR {
  double eps = 0.0;
  double scale = 1.0;
};

// One unbiased bit in {-B, +B} for each listed coordinate.
struct OneBitPerm {
  int r = 1;
  double bound = 1.0;
  std::vector<int> coords;
};

// Release (i, g(i)) with i drawn from `probs`.
struct Oblivious {
  std::vector<double> probs;
  // Cumulative sums of `probs`, shared between copies.
  std::shared_ptr<const std::vector<double>> cdf;
  // Index of the only support point, or -1.
  int point_mass = -1;
};

enum class ChannelFamily {
  kUnconstrained,
  kPrivacy,
  kCommunication,
  kOblivious,
};

const char* ChannelFamilyName(ChannelFamily family);

class ChannelSpec {
 public:
  using Kind = std::variant<IdentityChannel, LdpCoordRR, OneBitPerm, Oblivious>;

  static absl::StatusOr<ChannelSpec> Identity(int dimension);
  static absl::StatusOr<ChannelSpec> Ldp(int dimension, double eps,
                                         double scale);
  static absl::StatusOr<ChannelSpec> OneBit(int dimension, double bound,
                                            std::vector<int> coords);
  static absl::StatusOr<ChannelSpec> Obliv(int dimension,
                                           std::vector<double> probs);
  static absl::StatusOr<ChannelSpec> UniformOblivious(int dimension);
  static absl::StatusOr<ChannelSpec> PointMass(int dimension, int index);

  int dimension() const { return dimension_; }
  const Kind& kind() const { return kind_; }
  ChannelFamily family() const;
  // Short label used in reports: identity, ldp, onebit or oblivious.
  std::string Name() const;

  friend bool operator==(const ChannelSpec& a, const ChannelSpec& b);

 private:
  ChannelSpec(int dimension, Kind kind)
      : dimension_(dimension), kind_(std::move(kind)) {}

  int dimension_;
  Kind kind_;
};

struct RawPayload {
  Vector value;
};

// bits[k] == 1 encodes +bound at coordinate coords[k], 0 encodes -bound.
struct QuantizedPayload {
  std::vector<int> coords;
  std::vector<uint8_t> bits;
  double bound = 1.0;
};

struct LdpPayload {
  int index = 0;
  int bit = 1;  // +1 or -1
  double eps = 0.0;
  double scale = 1.0;
};

struct CoordinatePayload {
  int index = 0;
  double value = 0.0;
  double prob = 1.0;
};

// A channel output together with what the receiver needs to unbias it.
struct Message {
  int dimension = 0;
  std::variant<RawPayload, QuantizedPayload, LdpPayload, CoordinatePayload>
      payload;
  int64_t bit_cost = 0;

  friend bool operator==(const Message& a, const Message& b);
};

// Number of bits needed to name one of `dimension` coordinates.
int IndexBits(int dimension);

// Passes `g` through `spec`. Fails when `g` violates the channel's bound.
absl::StatusOr<Message> ApplyChannel(const ChannelSpec& spec, const Vector& g,
                                     RngStream& rng);

// Unbiased reconstruction of the channel input.
absl::StatusOr<Vector> Decode(const Message& message);

// Adds weight * Decode(message) to `*acc` touching only the support.
absl::Status AddDecoded(const Message& message, double weight, Vector* acc);

// Worst-case l2 norm of a decoded estimate when the channel input obeys
// ||g||_2 <= input_l2 (identity) or the channel's own bound (others).
double DecodedL2Bound(const ChannelSpec& spec, double input_l2);

}  // namespace infocon

#endif  // INFOCON_CHANNELS_CHANNEL_H_
