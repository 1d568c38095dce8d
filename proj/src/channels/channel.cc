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

#include "infocon/channels/channel.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "absl/strings/str_cat.h"
#include "infocon/channels/ldp.h"
#include "infocon/channels/oblivious.h"
#include "infocon/channels/quantizer.h"

namespace infocon {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

absl::Status CheckDimension(int dimension) {
  if (dimension < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("channel dimension must be >= 1, got ", dimension));
  }
  return absl::OkStatus();
}

}  // namespace

const char* ChannelFamilyName(ChannelFamily family) {
  switch (family) {
    case ChannelFamily::kUnconstrained:
      return "unconstrained";
    case ChannelFamily::kPrivacy:
      return "privacy";
    case ChannelFamily::kCommunication:
      return "communication";
    case ChannelFamily::kOblivious:
      return "oblivious";
  }
  return "unknown";
}

absl::StatusOr<ChannelSpec> ChannelSpec::Identity(int dimension) {
  if (absl::Status s = CheckDimension(dimension); !s.ok()) return s;
  return ChannelSpec(dimension, IdentityChannel{});
}

absl::StatusOr<ChannelSpec> ChannelSpec::Ldp(int dimension, double eps,
                                             double scale) {
  if (absl::Status s = CheckDimension(dimension); !s.ok()) return s;
  if (std::isnan(eps) || eps < 0.0) {
    return absl::InvalidArgumentError(absl::StrCat("eps must be >= 0, got ", eps));
  }
  if (!(scale > 0.0) || std::isinf(scale)) {
    return absl::InvalidArgumentError(
        absl::StrCat("LDP scale must be positive and finite, got ", scale));
  }
  return ChannelSpec(dimension, LdpCoordRR{eps, scale});
}

absl::StatusOr<ChannelSpec> ChannelSpec::OneBit(int dimension, double bound,
                                                std::vector<int> coords) {
  if (absl::Status s = CheckDimension(dimension); !s.ok()) return s;
  if (!(bound > 0.0) || std::isinf(bound)) {
    return absl::InvalidArgumentError(
        absl::StrCat("quantizer bound must be positive and finite, got ", bound));
  }
  const int r = static_cast<int>(coords.size());
  if (r < 1 || r > dimension) {
    return absl::InvalidArgumentError(
        absl::StrCat("bits per query must lie in [1, ", dimension, "], got ", r));
  }
  std::set<int> seen;
  for (int c : coords) {
    if (c < 0 || c >= dimension || !seen.insert(c).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("coordinate set must hold distinct indices in [0, ",
                       dimension, "); offending index ", c));
    }
  }
  return ChannelSpec(dimension, OneBitPerm{r, bound, std::move(coords)});
}

absl::StatusOr<ChannelSpec> ChannelSpec::Obliv(int dimension,
                                               std::vector<double> probs) {
  if (absl::Status s = CheckDimension(dimension); !s.ok()) return s;
  if (static_cast<int>(probs.size()) != dimension) {
    return absl::InvalidArgumentError(
        absl::StrCat("probability vector has length ", probs.size(),
                     ", expected ", dimension));
  }
  if (absl::Status s = ValidateProbabilities(probs); !s.ok()) return s;
  auto cdf = std::make_shared<std::vector<double>>(probs.size());
  double acc = 0.0;
  int support = 0, last = -1;
  for (size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    (*cdf)[i] = acc;
    if (probs[i] > 0.0) {
      ++support;
      last = static_cast<int>(i);
    }
  }
  Oblivious o{std::move(probs), std::move(cdf), support == 1 ? last : -1};
  return ChannelSpec(dimension, std::move(o));
}

absl::StatusOr<ChannelSpec> ChannelSpec::UniformOblivious(int dimension) {
  if (absl::Status s = CheckDimension(dimension); !s.ok()) return s;
  return Obliv(dimension, std::vector<double>(dimension, 1.0 / dimension));
}

absl::StatusOr<ChannelSpec> ChannelSpec::PointMass(int dimension, int index) {
  if (absl::Status s = CheckDimension(dimension); !s.ok()) return s;
  if (index < 0 || index >= dimension) {
    return absl::InvalidArgumentError(
        absl::StrCat("point mass index ", index, " outside [0, ", dimension, ")"));
  }
  std::vector<double> probs(dimension, 0.0);
  probs[index] = 1.0;
  return Obliv(dimension, std::move(probs));
}

ChannelFamily ChannelSpec::family() const {
  return std::visit(
      Overloaded{
          [](const IdentityChannel&) { return ChannelFamily::kUnconstrained; },
          [](const LdpCoordRR&) { return ChannelFamily::kPrivacy; },
          [](const OneBitPerm&) { return ChannelFamily::kCommunication; },
          [](const Oblivious&) { return ChannelFamily::kOblivious; }},
      kind_);
}

std::string ChannelSpec::Name() const {
  return std::visit(
      Overloaded{[](const IdentityChannel&) { return std::string("identity"); },
                 [](const LdpCoordRR&) { return std::string("ldp"); },
                 [](const OneBitPerm&) { return std::string("onebit"); },
                 [](const Oblivious&) { return std::string("oblivious"); }},
      kind_);
}

bool operator==(const ChannelSpec& a, const ChannelSpec& b) {
  if (a.dimension_ != b.dimension_ || a.kind_.index() != b.kind_.index()) {
    return false;
  }
  return std::visit(
      Overloaded{
          [](const IdentityChannel&, const IdentityChannel&) { return true; },
          [](const LdpCoordRR& x, const LdpCoordRR& y) {
            return x.eps == y.eps && x.scale == y.scale;
          },
          [](const OneBitPerm& x, const OneBitPerm& y) {
            return x.bound == y.bound && x.coords == y.coords;
          },
          [](const Oblivious& x, const Oblivious& y) {
            return x.probs == y.probs;
          },
          [](const auto&, const auto&) { return false; }},
      a.kind_, b.kind_);
}

bool operator==(const Message& a, const Message& b) {
  if (a.dimension != b.dimension || a.bit_cost != b.bit_cost ||
      a.payload.index() != b.payload.index()) {
    return false;
  }
  return std::visit(
      Overloaded{
          [](const RawPayload& x, const RawPayload& y) {
            return x.value == y.value;
          },
          [](const QuantizedPayload& x, const QuantizedPayload& y) {
            return x.coords == y.coords && x.bits == y.bits &&
                   x.bound == y.bound;
          },
          [](const LdpPayload& x, const LdpPayload& y) {
            return x.index == y.index && x.bit == y.bit && x.eps == y.eps &&
                   x.scale == y.scale;
          },
          [](const CoordinatePayload& x, const CoordinatePayload& y) {
            return x.index == y.index && x.value == y.value &&
                   x.prob == y.prob;
          },
          [](const auto&, const auto&) { return false; }},
      a.payload, b.payload);
}

int IndexBits(int dimension) {
  int bits = 0;
  while ((int64_t{1} << bits) < dimension) ++bits;
  return bits;
}

absl::StatusOr<Message> ApplyChannel(const ChannelSpec& spec, const Vector& g,
                                     RngStream& rng) {
  if (g.size() != spec.dimension()) {
    return absl::InvalidArgumentError(
        absl::StrCat("channel input has dimension ", g.size(), ", expected ",
                     spec.dimension()));
  }
  return std::visit(
      Overloaded{
          [&](const IdentityChannel&) -> absl::StatusOr<Message> {
            Message m;
            m.dimension = spec.dimension();
            m.payload = RawPayload{g};
            m.bit_cost = int64_t{64} * spec.dimension();
            return m;
          },
          [&](const LdpCoordRR& c) {
            return LdpVectorMechanism(g, c.eps, c.scale, rng);
          },
          [&](const OneBitPerm& c) {
            return OneBitQuantize(g, c.bound, c.coords, rng);
          },
          [&](const Oblivious& c) -> absl::StatusOr<Message> {
            const int i = SampleIndex(c, rng);
            Message m;
            m.dimension = spec.dimension();
            m.payload = CoordinatePayload{i, g[i], c.probs[i]};
            m.bit_cost = IndexBits(spec.dimension()) + 64;
            return m;
          }},
      spec.kind());
}

absl::Status AddDecoded(const Message& message, double weight, Vector* acc) {
  if (acc->size() != message.dimension) {
    return absl::InvalidArgumentError("accumulator dimension mismatch");
  }
  return std::visit(
      Overloaded{
          [&](const RawPayload& p) {
            *acc += weight * p.value;
            return absl::OkStatus();
          },
          [&](const QuantizedPayload& p) {
            for (size_t k = 0; k < p.coords.size(); ++k) {
              (*acc)[p.coords[k]] += weight * (p.bits[k] ? p.bound : -p.bound);
            }
            return absl::OkStatus();
          },
          [&](const LdpPayload& p) {
            if (!(p.eps > 0.0)) {
              return absl::FailedPreconditionError(
                  "LDP message with eps = 0 carries no information and "
                  "cannot be unbiased");
            }
            (*acc)[p.index] += weight * message.dimension * p.scale *
                               LdpUnbiasFactor(p.eps) * p.bit;
            return absl::OkStatus();
          },
          [&](const CoordinatePayload& p) {
            if (!(p.prob > 0.0)) {
              return absl::FailedPreconditionError(
                  "coordinate sampled with zero probability");
            }
            (*acc)[p.index] += weight * p.value / p.prob;
            return absl::OkStatus();
          }},
      message.payload);
}

absl::StatusOr<Vector> Decode(const Message& message) {
  Vector out = Vector::Zero(message.dimension);
  if (absl::Status s = AddDecoded(message, 1.0, &out); !s.ok()) return s;
  return out;
}

double DecodedL2Bound(const ChannelSpec& spec, double input_l2) {
  const double d = spec.dimension();
  return std::visit(
      Overloaded{
          [&](const IdentityChannel&) { return input_l2; },
          [&](const LdpCoordRR& c) {
            return d * c.scale * LdpUnbiasFactor(c.eps);
          },
          [&](const OneBitPerm& c) {
            return c.bound * std::sqrt(static_cast<double>(c.coords.size()));
          },
          [&](const Oblivious& c) {
            double min_p = 1.0;
            for (double p : c.probs) {
              if (p > 0.0) min_p = std::min(min_p, p);
            }
            return input_l2 / min_p;
          }},
      spec.kind());
}

}  // namespace infocon
