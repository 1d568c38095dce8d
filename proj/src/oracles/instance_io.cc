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

#include "infocon/oracles/instance_io.h"

#include <cmath>
#include <optional>

#include "absl/strings/str_format.h"
#include "infocon/oracles/block_sparse.h"
#include "infocon/oracles/hard_instances.h"
#include "json.hpp"

namespace infocon {
namespace {

using json = nlohmann::json;

absl::StatusOr<double> GetReal(const json& j, const char* key) {
  if (!j.contains(key)) {
    return absl::InvalidArgumentError(absl::StrFormat("missing field '%s'", key));
  }
  if (!j[key].is_number()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("field '%s' must be a number", key));
  }
  return j[key].get<double>();
}

absl::StatusOr<int> GetInt(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("field '%s' must be an integer", key));
  }
  return j[key].get<int>();
}

absl::Status CheckDerived(const json& j, const char* key, double expected) {
  if (!j.contains(key)) return absl::OkStatus();
  absl::StatusOr<double> got = GetReal(j, key);
  if (!got.ok()) return got.status();
  if (std::abs(*got - expected) > 1e-12 * std::max(1.0, std::abs(expected))) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "field '%s' = %.17g disagrees with derived value %.17g", key, *got,
        expected));
  }
  return absl::OkStatus();
}

// Explicit "v" if present, otherwise uniform signs from "v_seed".
absl::StatusOr<Vector> GetSigns(const json& j, int d) {
  if (j.contains("v")) {
    if (!j["v"].is_array() || static_cast<int>(j["v"].size()) != d) {
      return absl::InvalidArgumentError(
          absl::StrFormat("field 'v' must be an array of length %d", d));
    }
    Vector v(d);
    for (int i = 0; i < d; ++i) {
      if (!j["v"][i].is_number()) {
        return absl::InvalidArgumentError("field 'v' holds a non-number");
      }
      v[i] = j["v"][i].get<double>();
    }
    return v;
  }
  if (j.contains("v_seed")) {
    if (!j["v_seed"].is_number_unsigned()) {
      return absl::InvalidArgumentError("field 'v_seed' must be unsigned");
    }
    RngStream rng(j["v_seed"].get<uint64_t>(), 0);
    return RandomSignVector(d, rng);
  }
  return absl::InvalidArgumentError("need either 'v' or 'v_seed'");
}

template <typename T>
absl::StatusOr<std::unique_ptr<StochasticOracle>> Box(absl::StatusOr<T> inst) {
  if (!inst.ok()) return inst.status();
  return std::unique_ptr<StochasticOracle>(new T(std::move(*inst)));
}

json VectorToJson(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

}  // namespace

absl::StatusOr<std::unique_ptr<StochasticOracle>> OracleFromJson(
    absl::string_view text) {
  json j = json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    return absl::InvalidArgumentError("instance description is not a JSON object");
  }
  if (!j.contains("family") || !j["family"].is_string()) {
    return absl::InvalidArgumentError("missing string field 'family'");
  }
  const std::string family = j["family"].get<std::string>();
  absl::StatusOr<int> d = GetInt(j, "d");
  if (!d.ok()) return d.status();
  absl::StatusOr<double> delta = GetReal(j, "delta");
  if (!delta.ok()) return delta.status();

  if (family == "gc_p12" || family == "gc_pinf") {
    absl::StatusOr<Vector> v = GetSigns(j, *d);
    if (!v.ok()) return v.status();
    absl::StatusOr<double> bound = GetReal(j, "B");
    absl::StatusOr<double> p = GetReal(j, "p");
    absl::StatusOr<double> b = GetReal(j, "b");
    for (const auto* s : {&bound, &p, &b}) {
      if (!s->ok()) return s->status();
    }
    const ConvexRegime regime =
        family == "gc_p12" ? ConvexRegime::kP12 : ConvexRegime::kPinf;
    const double diameter = 2.0 * *b * DimensionRoot(*d, *p);
    absl::StatusOr<ConvexHardInstance> inst =
        ConvexHardInstance::Create(*v, *delta, *bound, diameter, *p, regime);
    if (!inst.ok()) return inst.status();
    if (absl::Status s = CheckDerived(j, "a", inst->a()); !s.ok()) return s;
    return Box(std::move(inst));
  }
  if (family == "gsc") {
    absl::StatusOr<Vector> v = GetSigns(j, *d);
    if (!v.ok()) return v.status();
    absl::StatusOr<double> theta = GetReal(j, "theta");
    absl::StatusOr<double> a = GetReal(j, "a");
    absl::StatusOr<double> b = GetReal(j, "b");
    for (const auto* s : {&theta, &a, &b}) {
      if (!s->ok()) return s->status();
    }
    absl::StatusOr<StronglyConvexInstance> inst =
        StronglyConvexInstance::Create(*v, *delta, *theta, *a, *b);
    if (!inst.ok()) return inst.status();
    if (absl::Status s = CheckDerived(j, "B", inst->bound()); !s.ok()) return s;
    return Box(std::move(inst));
  }
  if (family == "block_sparse") {
    absl::StatusOr<int> s = GetInt(j, "s");
    if (!s.ok()) return s.status();
    if (j.contains("v")) {
      if (!j["v"].is_array() || static_cast<int>(j["v"].size()) != *d) {
        return absl::InvalidArgumentError("field 'v' has the wrong length");
      }
      Vector v(*d);
      for (int i = 0; i < *d; ++i) v[i] = j["v"][i].get<double>();
      absl::StatusOr<BlockSparseInstance> inst =
          BlockSparseInstance::Create(std::move(v), *s);
      if (!inst.ok()) return inst.status();
      if (inst->delta() != 0.0 && std::abs(inst->delta() - *delta) > 1e-12) {
        return absl::InvalidArgumentError("'delta' disagrees with 'v'");
      }
      return Box(std::move(inst));
    }
    if (!j.contains("v_seed") || !j["v_seed"].is_number_unsigned()) {
      return absl::InvalidArgumentError("need either 'v' or 'v_seed'");
    }
    RngStream rng(j["v_seed"].get<uint64_t>(), 0);
    return Box(BlockSparseInstance::Random(*d, *s, *delta, rng));
  }
  return absl::InvalidArgumentError(
      absl::StrFormat("unknown instance family '%s'", family));
}

absl::StatusOr<std::string> OracleToJson(const StochasticOracle& oracle) {
  json j;
  j["family"] = oracle.family();
  j["d"] = oracle.dimension();
  if (const auto* gc = dynamic_cast<const ConvexHardInstance*>(&oracle)) {
    j["v"] = VectorToJson(gc->v());
    j["delta"] = gc->delta();
    j["B"] = gc->bound();
    j["p"] = gc->p();
    j["a"] = gc->a();
    j["b"] = gc->b();
  } else if (const auto* gsc =
                 dynamic_cast<const StronglyConvexInstance*>(&oracle)) {
    j["v"] = VectorToJson(gsc->v());
    j["delta"] = gsc->delta();
    j["theta"] = gsc->theta();
    j["a"] = gsc->a();
    j["b"] = gsc->b();
    j["B"] = gsc->bound();
  } else if (const auto* bs =
                 dynamic_cast<const BlockSparseInstance*>(&oracle)) {
    j["v"] = VectorToJson(bs->v());
    j["s"] = bs->block_size();
    j["delta"] = bs->delta();
  } else {
    return absl::UnimplementedError(
        absl::StrFormat("family '%s' is not serializable", oracle.family()));
  }
  return j.dump();
}

}  // namespace infocon
