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

#ifndef EONPLAN_MODULATION_HPP_
#define EONPLAN_MODULATION_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace eonplan {

struct ModulationFormat {
  std::string name;
  int bits_per_symbol = 1;
  double max_reach_km = 0.0;
};

// Distance-adaptive modulation formats, kept sorted by bits per symbol.
// Reach strictly decreases as bits per symbol grow and BPSK (m = 1) is
// always present as the fallback.
class ModulationTable {
 public:
  explicit ModulationTable(std::vector<ModulationFormat> formats);

  // BPSK 4000 km, QPSK 2000 km, 8-QAM 1000 km, 16-QAM 500 km.
  static ModulationTable Default();

  const std::vector<ModulationFormat>& formats() const { return formats_; }
  const ModulationFormat& Find(int bits_per_symbol) const;

 private:
  std::vector<ModulationFormat> formats_;
};

// csv with header `name,bits_per_symbol,max_reach_km`.
ModulationTable ReadModulationCsv(std::istream& in,
                                  std::string_view name = "<stream>");
ModulationTable LoadModulationTable(const std::filesystem::path& path);

struct ModulationChoice {
  int bits_per_symbol = 1;
  bool out_of_reach = false;  // no format reaches; BPSK used anyway
};

// Highest-order format whose reach covers `distance_km`.
ModulationChoice SelectModulation(double distance_km,
                                  const ModulationTable& table);

// Frequency slots for `gbps`: ceil(gbps / (baud * m)) + guard, or 0 when the
// bit-rate is 0 (no guard for an idle connection).
int RequiredSlots(double gbps, int bits_per_symbol, double baud_gbaud,
                  int guard_slots);

}  // namespace eonplan

#endif  // EONPLAN_MODULATION_HPP_
