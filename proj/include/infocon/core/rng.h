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

#ifndef INFOCON_CORE_RNG_H_
#define INFOCON_CORE_RNG_H_

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

namespace infocon {

// One application of the Philox4x32-10 block function.
std::array<uint32_t, 4> Philox4x32(std::array<uint32_t, 4> counter,
                                   std::array<uint32_t, 2> key);

// A counter-based random stream addressed by (seed, stream_id).
//
// Output block k is Philox4x32-10 keyed by `seed` at counter
// (k, stream_id), so a stream's sequence depends only on its address.
// Substream() derives child addresses, which gives the experiment -> trial
// -> step hierarchy without any shared state between streams.
//
// Satisfies UniformRandomBitGenerator. Copies replay the same draws.
class RngStream {
 public:
  using result_type = uint64_t;

  RngStream(uint64_t seed, uint64_t stream_id)
      : seed_(seed), stream_id_(stream_id) {}

  uint64_t seed() const { return seed_; }
  uint64_t stream_id() const { return stream_id_; }

  // A child stream. Children with distinct `index` have distinct addresses.
  RngStream Substream(uint64_t index) const;
  RngStream Substream(uint64_t i, uint64_t j) const {
    return Substream(i).Substream(j);
  }

  uint64_t Next();
  uint64_t operator()() { return Next(); }
  static constexpr uint64_t min() { return 0; }
  static constexpr uint64_t max() {
    return std::numeric_limits<uint64_t>::max();
  }

  // Uniform on [0, 1) with 53 bits of resolution.
  double Uniform();
  // True with probability p; p outside [0, 1] is clamped.
  bool Bernoulli(double p);
  // Uniform on {0, ..., n - 1}; n must be >= 1.
  uint64_t UniformInt(uint64_t n);
  // A uniformly random permutation of {0, ..., n - 1}.
  std::vector<int> Permutation(int n);

 private:
  uint64_t seed_;
  uint64_t stream_id_;
  uint64_t block_ = 0;
  std::array<uint32_t, 4> buffer_{};
  int buffered_ = 0;
};

// SplitMix64 finalizer.
uint64_t Mix64(uint64_t x);

}  // namespace infocon

#endif  // INFOCON_CORE_RNG_H_
