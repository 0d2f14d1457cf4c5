// Copyright 2026 The eonplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eonplan/config.hpp"

#include <fstream>
#include <functional>
#include <istream>

#include "eonplan/csv.hpp"
#include "eonplan/error.hpp"

namespace eonplan {
namespace {

struct Field {
  const char* key;
  std::function<void(RunConfig&, std::string_view)> set;
  std::function<std::string(const RunConfig&)> get;
};

int ToInt(std::string_view key, std::string_view v) {
  try {
    return static_cast<int>(csv::ParseInt(v, key));
  } catch (const ParseError& e) {
    throw ConfigError(e.what());
  }
}

double ToDouble(std::string_view key, std::string_view v) {
  try {
    return csv::ParseDouble(v, key);
  } catch (const ParseError& e) {
    throw ConfigError(e.what());
  }
}

bool ToBool(std::string_view key, std::string_view v) {
  v = csv::Trim(v);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(std::string(key) + ": not a boolean: '" + std::string(v) +
                    "'");
}

std::string Str(std::string_view v) { return std::string(csv::Trim(v)); }

#define EONPLAN_STRING_FIELD(name)                                         \
  Field {                                                                   \
    #name, [](RunConfig& c, std::string_view v) { c.name = Str(v); },       \
        [](const RunConfig& c) { return c.name; }                           \
  }
#define EONPLAN_INT_FIELD(name)                                            \
  Field {                                                                   \
    #name, [](RunConfig& c, std::string_view v) { c.name = ToInt(#name, v); }, \
        [](const RunConfig& c) { return std::to_string(c.name); }           \
  }
#define EONPLAN_DOUBLE_FIELD(name)                                         \
  Field {                                                                   \
    #name,                                                                  \
        [](RunConfig& c, std::string_view v) { c.name = ToDouble(#name, v); }, \
        [](const RunConfig& c) { return csv::FormatDouble(c.name); }        \
  }
#define EONPLAN_BOOL_FIELD(name)                                           \
  Field {                                                                   \
    #name, [](RunConfig& c, std::string_view v) { c.name = ToBool(#name, v); }, \
        [](const RunConfig& c) { return std::string(c.name ? "true" : "false"); } \
  }

const std::vector<Field>& Fields() {
  static const std::vector<Field> fields = {
      EONPLAN_STRING_FIELD(topology),
      EONPLAN_STRING_FIELD(trace),
      EONPLAN_STRING_FIELD(trace_format),
      EONPLAN_STRING_FIELD(predictor),
      EONPLAN_STRING_FIELD(schemes),
      EONPLAN_INT_FIELD(u),
      EONPLAN_INT_FIELD(r),
      EONPLAN_INT_FIELD(k),
      EONPLAN_INT_FIELD(slots),
      EONPLAN_DOUBLE_FIELD(baud),
      EONPLAN_INT_FIELD(guard_slots),
      EONPLAN_INT_FIELD(kappa),
      EONPLAN_DOUBLE_FIELD(scale),
      Field{"seed",
            [](RunConfig& c, std::string_view v) {
              const int64_t s = ToInt("seed", v);
              if (s < 0) throw ConfigError("seed must be >= 0");
              c.seed = static_cast<std::uint64_t>(s);
            },
            [](const RunConfig& c) { return std::to_string(c.seed); }},
      EONPLAN_STRING_FIELD(out),
      Field{"patterns",
            [](RunConfig& c, std::string_view v) {
              const int p = ToInt("patterns", v);
              if (p < 2) throw ConfigError("patterns must be >= 2");
              c.patterns = static_cast<std::size_t>(p);
            },
            [](const RunConfig& c) { return std::to_string(c.patterns); }},
      EONPLAN_DOUBLE_FIELD(train_fraction),
      EONPLAN_INT_FIELD(replan_every),
      EONPLAN_STRING_FIELD(modulation),
      EONPLAN_BOOL_FIELD(audit),
      EONPLAN_BOOL_FIELD(log_adjustments),
  };
  return fields;
}

}  // namespace

PlanningParams RunConfig::ToPlanningParams() const {
  PlanningParams p;
  p.shape = WindowShape{r, k, u};
  p.slots = slots;
  p.baud_gbaud = baud;
  p.guard_slots = guard_slots;
  p.kappa = kappa;
  p.scale = scale;
  p.seed = seed;
  p.patterns = patterns;
  p.train_fraction = train_fraction;
  if (replan_every < 0) throw ConfigError("replan_every must be >= 0");
  if (replan_every > 0) p.replan_every = replan_every;
  p.Validate();
  return p;
}

std::vector<std::pair<std::string, std::string>> RunConfig::ToKeyValues() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& f : Fields()) out.emplace_back(f.key, f.get(*this));
  return out;
}

void RunConfig::Set(std::string_view key, std::string_view value) {
  key = csv::Trim(key);
  for (const auto& f : Fields()) {
    if (key == f.key) {
      f.set(*this, value);
      return;
    }
  }
  throw ConfigError("unknown config key '" + std::string(key) + "'");
}

std::vector<std::string> ConfigKeys() {
  std::vector<std::string> out;
  for (const auto& f : Fields()) out.emplace_back(f.key);
  return out;
}

void ApplyConfigFile(std::istream& in, RunConfig& config,
                     std::string_view name) {
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    std::string_view text = line;
    if (auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = csv::Trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(std::string(name) + " line " + std::to_string(n) +
                        ": expected key = value");
    }
    try {
      config.Set(text.substr(0, eq), text.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(name) + " line " + std::to_string(n) +
                        ": " + e.what());
    }
  }
}

void ApplyConfigFile(const std::filesystem::path& path, RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  ApplyConfigFile(in, config, path.string());
}

}  // namespace eonplan
