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

#ifndef EONPLAN_CONFIG_HPP_
#define EONPLAN_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eonplan/planner.hpp"

namespace eonplan {

// Everything a `simulate` run needs. Defaults reproduce the Abilene study
// setup: u=4, r=3, k=6, 320 slots, 10.5 Gbaud, kappa=3, bit-rates x50.
struct RunConfig {
  std::string topology = "data/abilene.xml";
  std::string trace;
  std::string trace_format = "csv";
  std::string predictor = "oracle";
  std::string schemes = "mmd,mad,ssd";
  int u = 4;
  int r = 3;
  int k = 6;
  int slots = 320;
  double baud = 10.5;
  int guard_slots = 0;
  int kappa = 3;
  double scale = 50.0;
  std::uint64_t seed = 1;
  std::string out = "out";
  std::size_t patterns = 800;
  double train_fraction = 0.8;
  int replan_every = 0;  // 0: every u intervals for MMD/MAD
  std::string modulation;  // empty: built-in reach table
  bool audit = false;
  bool log_adjustments = false;

  PlanningParams ToPlanningParams() const;

  // Resolved configuration as ordered key/value pairs.
  std::vector<std::pair<std::string, std::string>> ToKeyValues() const;

  // Throws ConfigError for unknown keys or unparsable values.
  void Set(std::string_view key, std::string_view value);
};

// `key = value` lines; '#' starts a comment. Values apply in file order.
void ApplyConfigFile(std::istream& in, RunConfig& config,
                     std::string_view name = "<stream>");
void ApplyConfigFile(const std::filesystem::path& path, RunConfig& config);

std::vector<std::string> ConfigKeys();

}  // namespace eonplan

#endif  // EONPLAN_CONFIG_HPP_
