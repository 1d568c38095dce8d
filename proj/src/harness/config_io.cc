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

#include "infocon/harness/config_io.h"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/match.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_replace.h"
#include "json.hpp"
#include "toml.hpp"

namespace infocon {
namespace {

using Json = nlohmann::json;
// JSON pointer -> 1-based source line.
using LineMap = std::map<std::string, int>;

std::string EscapePointer(std::string_view key) {
  return absl::StrReplaceAll(std::string(key), {{"~", "~0"}, {"/", "~1"}});
}

// Records the line where each value starts, keyed by JSON pointer. Runs on
// text nlohmann has already accepted, so it only tracks structure.
LineMap ScanJsonLines(std::string_view text) {
  struct Frame {
    bool object;
    std::string pointer;
    int index = 0;
    std::string key;
  };
  LineMap lines;
  std::vector<Frame> stack;
  int line = 1;
  bool expect_key = false;
  auto value_pointer = [&]() -> std::string {
    if (stack.empty()) return "";
    const Frame& f = stack.back();
    return f.pointer + "/" +
           (f.object ? EscapePointer(f.key)
                     : std::to_string(f.index));
  };
  auto mark_value = [&] {
    if (!stack.empty()) lines.emplace(value_pointer(), line);
  };
  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') continue;
    if (c == '"') {
      std::string s;
      for (++i; i < text.size() && text[i] != '"'; ++i) {
        if (text[i] == '\\' && i + 1 < text.size()) ++i;
        s.push_back(text[i]);
      }
      if (expect_key) {
        stack.back().key = Json::parse("\"" + std::string(s) + "\"",
                                       nullptr, false)
                               .get<std::string>();
        expect_key = false;
      } else {
        mark_value();
      }
      continue;
    }
    if (c == '{' || c == '[') {
      mark_value();
      const std::string pointer = value_pointer();
      stack.push_back(Frame{c == '{', pointer});
      expect_key = c == '{';
      continue;
    }
    if (c == '}' || c == ']') {
      if (!stack.empty()) stack.pop_back();
      expect_key = false;
      continue;
    }
    if (c == ',') {
      if (!stack.empty()) {
        if (stack.back().object) {
          expect_key = true;
        } else {
          ++stack.back().index;
        }
      }
      continue;
    }
    if (c == ':') continue;
    // Scalar literal: record it and skip to its end.
    mark_value();
    while (i + 1 < text.size() && std::string_view(",]} \t\r\n").find(
                                      text[i + 1]) == std::string_view::npos) {
      ++i;
    }
  }
  return lines;
}

Json TomlToJson(const toml::node& node, const std::string& pointer,
                LineMap* lines) {
  lines->emplace(pointer, static_cast<int>(node.source().begin.line));
  if (const toml::table* t = node.as_table()) {
    Json out = Json::object();
    for (const auto& [key, child] : *t) {
      const std::string k(key.str());
      out[k] = TomlToJson(child, pointer + "/" + EscapePointer(k),
                          lines);
    }
    return out;
  }
  if (const toml::array* a = node.as_array()) {
    Json out = Json::array();
    for (size_t i = 0; i < a->size(); ++i) {
      out.push_back(TomlToJson((*a)[i], pointer + "/" + std::to_string(i), lines));
    }
    return out;
  }
  if (auto v = node.value_exact<int64_t>()) return *v;
  if (auto v = node.value_exact<double>()) return *v;
  if (auto v = node.value_exact<bool>()) return *v;
  if (auto v = node.value_exact<std::string>()) return *v;
  return Json(nullptr);
}

// Reads typed fields out of the parsed tree, reporting errors by line.
class Reader {
 public:
  Reader(const Json& root, const LineMap& lines, std::string source)
      : root_(root), lines_(lines), source_(std::move(source)) {}

  absl::Status Error(const std::string& pointer, const std::string& what) const {
    std::string key = absl::StrReplaceAll(pointer.substr(1), {{"/", "."}});
    if (key.empty()) key = "(top level)";
    // Fall back to the nearest enclosing key that has a line.
    std::string p = pointer;
    while (true) {
      auto it = lines_.find(p);
      if (it != lines_.end()) {
        return absl::InvalidArgumentError(
            absl::StrFormat("%s:%d: %s: %s", source_, it->second, key, what));
      }
      const size_t slash = p.rfind('/');
      if (slash == std::string::npos || p.empty()) break;
      p = p.substr(0, slash);
    }
    return absl::InvalidArgumentError(
        absl::StrFormat("%s: %s: %s", source_, key, what));
  }

  const Json* Find(const std::string& pointer) const {
    const Json::json_pointer ptr(pointer);
    return root_.contains(ptr) ? &root_.at(ptr) : nullptr;
  }

  absl::Status CheckKeys(const std::string& pointer,
                         const std::set<std::string>& allowed) const {
    const Json* obj = pointer.empty() ? &root_ : Find(pointer);
    if (obj == nullptr) return absl::OkStatus();
    if (!obj->is_object()) return Error(pointer, "expected a table");
    for (const auto& [key, value] : obj->items()) {
      if (!allowed.count(key)) {
        return Error(pointer + "/" + key,
                     absl::StrFormat("unknown key (expected one of: %s)",
                                     absl::StrJoin(allowed, ", ")));
      }
    }
    return absl::OkStatus();
  }

  absl::StatusOr<std::optional<std::string>> String(
      const std::string& pointer) const {
    const Json* v = Find(pointer);
    if (v == nullptr) return std::optional<std::string>();
    if (!v->is_string()) return Error(pointer, "expected a string");
    return std::optional<std::string>(v->get<std::string>());
  }

  absl::StatusOr<std::optional<double>> Number(const std::string& pointer) const {
    const Json* v = Find(pointer);
    if (v == nullptr) return std::optional<double>();
    if (!v->is_number()) return Error(pointer, "expected a number");
    return std::optional<double>(v->get<double>());
  }

  absl::StatusOr<std::optional<int64_t>> Integer(
      const std::string& pointer) const {
    const Json* v = Find(pointer);
    if (v == nullptr) return std::optional<int64_t>();
    if (!v->is_number_integer()) return Error(pointer, "expected an integer");
    return std::optional<int64_t>(v->get<int64_t>());
  }

  // A list of numbers; a single scalar counts as a one-element list.
  absl::StatusOr<std::vector<double>> NumberList(
      const std::string& pointer, bool integers) const {
    const Json* v = Find(pointer);
    std::vector<double> out;
    if (v == nullptr) return out;
    auto take = [&](const Json& x, const std::string& at) -> absl::Status {
      if (integers ? !x.is_number_integer() : !x.is_number()) {
        return Error(at, integers ? "expected an integer" : "expected a number");
      }
      out.push_back(x.get<double>());
      return absl::OkStatus();
    };
    if (v->is_array()) {
      for (size_t i = 0; i < v->size(); ++i) {
        if (absl::Status s = take((*v)[i], pointer + "/" + std::to_string(i));
            !s.ok()) {
          return s;
        }
      }
    } else if (absl::Status s = take(*v, pointer); !s.ok()) {
      return s;
    }
    return out;
  }

 private:
  const Json& root_;
  const LineMap& lines_;
  std::string source_;
};

#define INFOCON_ASSIGN_OR_RETURN(lhs, rexpr) \
  auto lhs##_or = (rexpr);                   \
  if (!lhs##_or.ok()) return lhs##_or.status(); \
  auto lhs = *std::move(lhs##_or)

absl::StatusOr<ExperimentConfig> FromTree(const Json& root,
                                          const LineMap& lines,
                                          std::string_view source) {
  Reader in(root, lines, std::string(source));
  if (!root.is_object()) return in.Error("", "expected a table at top level");
  if (absl::Status s = in.CheckKeys(
          "", {"id", "kind", "algorithm", "algorithms", "trials", "seed",
               "output", "instance", "channel", "schedule", "grid"});
      !s.ok()) {
    return s;
  }
  if (absl::Status s = in.CheckKeys(
          "/instance", {"family", "delta", "B", "D", "p", "theta"});
      !s.ok()) {
    return s;
  }
  if (absl::Status s = in.CheckKeys("/channel", {"kind", "probs"}); !s.ok()) {
    return s;
  }
  if (absl::Status s = in.CheckKeys("/schedule", {"kind", "value"}); !s.ok()) {
    return s;
  }
  if (absl::Status s = in.CheckKeys("/grid", {"d", "s", "r", "eps", "T"});
      !s.ok()) {
    return s;
  }

  ExperimentConfig config;
  INFOCON_ASSIGN_OR_RETURN(id, in.String("/id"));
  if (!id.has_value() || id->empty()) return in.Error("/id", "required");
  config.id = *id;

  INFOCON_ASSIGN_OR_RETURN(kind, in.String("/kind"));
  if (!kind.has_value()) return in.Error("/kind", "required");
  absl::StatusOr<ExperimentKind> parsed_kind = ParseExperimentKind(*kind);
  if (!parsed_kind.ok()) {
    return in.Error("/kind", std::string(parsed_kind.status().message()));
  }
  config.kind = *parsed_kind;

  INFOCON_ASSIGN_OR_RETURN(algorithm, in.String("/algorithm"));
  if (algorithm.has_value()) {
    if (in.Find("/algorithms") != nullptr) {
      return in.Error("/algorithms", "give either algorithm or algorithms");
    }
    absl::StatusOr<AlgorithmId> a = ParseAlgorithm(*algorithm);
    if (!a.ok()) return in.Error("/algorithm", std::string(a.status().message()));
    config.algorithms.push_back(*a);
  } else if (const Json* list = in.Find("/algorithms")) {
    if (!list->is_array() || list->empty()) {
      return in.Error("/algorithms", "expected a nonempty list of names");
    }
    for (size_t i = 0; i < list->size(); ++i) {
      const std::string at = "/algorithms/" + std::to_string(i);
      if (!(*list)[i].is_string()) return in.Error(at, "expected a string");
      absl::StatusOr<AlgorithmId> a = ParseAlgorithm((*list)[i].get<std::string>());
      if (!a.ok()) return in.Error(at, std::string(a.status().message()));
      config.algorithms.push_back(*a);
    }
  } else if (config.kind == ExperimentKind::kSeparation) {
    config.algorithms = {AlgorithmId::kAcd, AlgorithmId::kNonadaptive};
  }

  INFOCON_ASSIGN_OR_RETURN(trials, in.Integer("/trials"));
  if (trials.has_value()) {
    if (*trials < 1) return in.Error("/trials", "must be >= 1");
    config.trials = static_cast<int>(*trials);
  }
  INFOCON_ASSIGN_OR_RETURN(seed, in.Integer("/seed"));
  if (seed.has_value()) {
    if (*seed < 0) return in.Error("/seed", "must be >= 0");
    config.seed = static_cast<uint64_t>(*seed);
  }
  INFOCON_ASSIGN_OR_RETURN(output, in.String("/output"));
  if (output.has_value()) config.output = *output;

  if (config.kind == ExperimentKind::kMiCheck) {
    INFOCON_ASSIGN_OR_RETURN(delta, in.Number("/instance/delta"));
    if (!delta.has_value()) return in.Error("/instance/delta", "required");
    config.instance.family = "gc_p12";
    config.instance.delta = *delta;
    INFOCON_ASSIGN_OR_RETURN(sampler, in.String("/channel/kind"));
    if (sampler.has_value()) {
      if (*sampler != "uniform" && *sampler != "skewed") {
        return in.Error("/channel/kind", "expected uniform or skewed");
      }
      config.channel.kind = *sampler;
    }
    INFOCON_ASSIGN_OR_RETURN(d, in.NumberList("/grid/d", true));
    INFOCON_ASSIGN_OR_RETURN(horizon, in.NumberList("/grid/T", true));
    if (d.empty()) return in.Error("/grid/d", "required");
    if (horizon.empty()) return in.Error("/grid/T", "required");
    for (size_t i = 0; i < d.size(); ++i) {
      if (d[i] < 1 || d[i] > 3) {
        return in.Error("/grid/d", "mi_check enumerates d in 1..3 only");
      }
    }
    for (size_t i = 0; i < horizon.size(); ++i) {
      if (horizon[i] < 1 || horizon[i] > 3) {
        return in.Error("/grid/T", "mi_check enumerates T in 1..3 only");
      }
    }
    config.grid.d.assign(d.begin(), d.end());
    config.grid.horizon.assign(horizon.begin(), horizon.end());
    return config;
  }
  if (config.kind == ExperimentKind::kVerify) return config;

  if (!trials.has_value()) return in.Error("/trials", "required");
  InstanceParams& inst = config.instance;
  INFOCON_ASSIGN_OR_RETURN(family, in.String("/instance/family"));
  if (!family.has_value()) return in.Error("/instance/family", "required");
  inst.family = *family;
  auto required = [&](const std::string& pointer,
                      double* dst) -> absl::Status {
    absl::StatusOr<std::optional<double>> v = in.Number(pointer);
    if (!v.ok()) return v.status();
    if (!v->has_value()) return in.Error(pointer, "required");
    *dst = **v;
    return absl::OkStatus();
  };
  if (absl::Status s = required("/instance/delta", &inst.delta); !s.ok()) return s;
  if (inst.family != "block_sparse") {
    if (absl::Status s = required("/instance/B", &inst.bound); !s.ok()) return s;
    if (absl::Status s = required("/instance/D", &inst.diameter); !s.ok()) {
      return s;
    }
  }
  if (inst.family == "gc_p12" || inst.family == "gc_pinf") {
    if (absl::Status s = required("/instance/p", &inst.p); !s.ok()) return s;
  }
  if (inst.family == "gsc") {
    if (absl::Status s = required("/instance/theta", &inst.theta); !s.ok()) {
      return s;
    }
  }

  INFOCON_ASSIGN_OR_RETURN(channel, in.String("/channel/kind"));
  if (channel.has_value()) config.channel.kind = *channel;
  INFOCON_ASSIGN_OR_RETURN(probs, in.NumberList("/channel/probs", false));
  config.channel.probs = probs;
  for (AlgorithmId a : config.algorithms) {
    if (a == AlgorithmId::kSgd && config.channel.kind.empty()) {
      return in.Error("/channel/kind", "required for sgd");
    }
  }

  INFOCON_ASSIGN_OR_RETURN(schedule, in.String("/schedule/kind"));
  if (schedule.has_value()) {
    config.schedule.kind = *schedule;
    INFOCON_ASSIGN_OR_RETURN(value, in.Number("/schedule/value"));
    if (value.has_value()) {
      config.schedule.value = *value;
    } else if (*schedule != "strongly_convex") {
      return in.Error("/schedule/value", "required");
    }
  } else {
    for (AlgorithmId a : config.algorithms) {
      if (a == AlgorithmId::kSgd || a == AlgorithmId::kRcd ||
          a == AlgorithmId::kPiStar) {
        return in.Error("/schedule/kind",
                        absl::StrFormat("required for %s", AlgorithmName(a)));
      }
    }
  }

  auto ints = [](const std::vector<double>& xs) {
    return std::vector<int>(xs.begin(), xs.end());
  };
  INFOCON_ASSIGN_OR_RETURN(d, in.NumberList("/grid/d", true));
  INFOCON_ASSIGN_OR_RETURN(s, in.NumberList("/grid/s", true));
  INFOCON_ASSIGN_OR_RETURN(r, in.NumberList("/grid/r", true));
  INFOCON_ASSIGN_OR_RETURN(eps, in.NumberList("/grid/eps", false));
  INFOCON_ASSIGN_OR_RETURN(horizon, in.NumberList("/grid/T", true));
  if (d.empty()) return in.Error("/grid/d", "required");
  if (horizon.empty()) return in.Error("/grid/T", "required");
  config.grid.d = ints(d);
  config.grid.s = ints(s);
  config.grid.r = ints(r);
  config.grid.eps = eps;
  config.grid.horizon.assign(horizon.begin(), horizon.end());

  // Range and divisibility checks, pinned to the grid table's line.
  if (absl::Status st = ValidateConfig(config); !st.ok()) {
    return in.Error("/grid", std::string(st.message()));
  }
  return config;
}

#undef INFOCON_ASSIGN_OR_RETURN

}  // namespace

absl::StatusOr<ExperimentConfig> ParseConfig(std::string_view text,
                                             ConfigFormat format,
                                             std::string_view source) {
  Json root;
  LineMap lines;
  if (format == ConfigFormat::kJson) {
    try {
      root = Json::parse(text);
    } catch (const Json::parse_error& e) {
      // e.byte is 1-based and points just past the offending token.
      const size_t at = std::min<size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
      const int line = 1 + static_cast<int>(std::count(
                               text.begin(), text.begin() + at, '\n'));
      return absl::InvalidArgumentError(
          absl::StrFormat("%s:%d: JSON syntax error: %s", std::string(source), line,
          e.what()));
    }
    lines = ScanJsonLines(text);
  } else {
    try {
      toml::table table = toml::parse(text, source);
      root = TomlToJson(table, "", &lines);
    } catch (const toml::parse_error& e) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "%s:%d:%d: TOML syntax error: %s", std::string(source),
          static_cast<int>(e.source().begin.line),
          static_cast<int>(e.source().begin.column),
          std::string(e.description())));
    }
  }
  return FromTree(root, lines, source);
}

absl::StatusOr<ExperimentConfig> LoadConfig(const std::string& path) {
  ConfigFormat format;
  if (absl::EndsWith(path, ".json")) {
    format = ConfigFormat::kJson;
  } else if (absl::EndsWith(path, ".toml")) {
    format = ConfigFormat::kToml;
  } else {
    return absl::InvalidArgumentError(
        absl::StrFormat("%s: config must end in .json or .toml", path));
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(absl::StrFormat("%s: cannot open", path));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str(), format, path);
}

void ApplyOverrides(const ConfigOverrides& o, ExperimentConfig* config) {
  if (o.seed) config->seed = *o.seed;
  if (o.trials) config->trials = *o.trials;
  if (o.d) config->grid.d = {*o.d};
  if (o.s) config->grid.s = {*o.s};
  if (o.r) config->grid.r = {*o.r};
  if (o.eps) config->grid.eps = {*o.eps};
  if (o.horizon) config->grid.horizon = {*o.horizon};
  if (o.delta) config->instance.delta = *o.delta;
  if (o.output) config->output = *o.output;
}

}  // namespace infocon
