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

#include "eonplan/modulation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>

#include "eonplan/csv.hpp"
#include "eonplan/error.hpp"

namespace eonplan {

ModulationTable::ModulationTable(std::vector<ModulationFormat> formats)
    : formats_(std::move(formats)) {
  std::sort(formats_.begin(), formats_.end(),
            [](const auto& a, const auto& b) {
              return a.bits_per_symbol < b.bits_per_symbol;
            });
  if (formats_.empty() || formats_.front().bits_per_symbol != 1) {
    throw ConfigError("modulation table must contain BPSK (bits_per_symbol 1)");
  }
  for (std::size_t i = 0; i < formats_.size(); ++i) {
    const auto& f = formats_[i];
    if (!(f.max_reach_km > 0.0) || !std::isfinite(f.max_reach_km)) {
      throw ConfigError("modulation " + f.name + ": reach must be positive");
    }
    if (i > 0) {
      const auto& prev = formats_[i - 1];
      if (prev.bits_per_symbol == f.bits_per_symbol) {
        throw ConfigError("modulation table repeats bits_per_symbol " +
                          std::to_string(f.bits_per_symbol));
      }
      if (!(f.max_reach_km < prev.max_reach_km)) {
        throw ConfigError("modulation reach must strictly decrease with "
                          "bits per symbol (" + prev.name + " vs " + f.name +
                          ")");
      }
    }
  }
}

ModulationTable ModulationTable::Default() {
  return ModulationTable({{"BPSK", 1, 4000.0},
                          {"QPSK", 2, 2000.0},
                          {"8-QAM", 3, 1000.0},
                          {"16-QAM", 4, 500.0}});
}

const ModulationFormat& ModulationTable::Find(int bits_per_symbol) const {
  for (const auto& f : formats_) {
    if (f.bits_per_symbol == bits_per_symbol) return f;
  }
  throw ConfigError("no modulation with " + std::to_string(bits_per_symbol) +
                    " bits per symbol");
}

ModulationTable ReadModulationCsv(std::istream& in, std::string_view name) {
  csv::Reader reader(in);
  std::vector<std::string> row;
  if (!reader.Next(row) || row.size() != 3 ||
      csv::Trim(row[0]) != "name" || csv::Trim(row[1]) != "bits_per_symbol" ||
      csv::Trim(row[2]) != "max_reach_km") {
    throw ParseError(std::string(name) +
                     " line 1: header must be name,bits_per_symbol,max_reach_km");
  }
  std::vector<ModulationFormat> formats;
  while (reader.Next(row)) {
    const std::string where =
        std::string(name) + " line " + std::to_string(reader.line());
    if (row.size() != 3) throw ParseError(where + ": expected 3 fields");
    formats.push_back(
        {std::string(csv::Trim(row[0])),
         static_cast<int>(csv::ParseInt(row[1], where)),
         csv::ParseDouble(row[2], where)});
  }
  return ModulationTable(std::move(formats));
}

ModulationTable LoadModulationTable(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open modulation table: " + path.string());
  return ReadModulationCsv(in, path.string());
}

ModulationChoice SelectModulation(double distance_km,
                                  const ModulationTable& table) {
  const auto& formats = table.formats();
  for (auto it = formats.rbegin(); it != formats.rend(); ++it) {
    if (it->max_reach_km >= distance_km) return {it->bits_per_symbol, false};
  }
  return {1, true};
}

int RequiredSlots(double gbps, int bits_per_symbol, double baud_gbaud,
                  int guard_slots) {
  if (!(gbps > 0.0)) return 0;
  const double per_slot = baud_gbaud * static_cast<double>(bits_per_symbol);
  return static_cast<int>(std::ceil(gbps / per_slot)) + guard_slots;
}

}  // namespace eonplan
