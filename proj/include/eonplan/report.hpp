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

#ifndef EONPLAN_REPORT_HPP_
#define EONPLAN_REPORT_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eonplan/planner.hpp"

namespace eonplan {

using ConfigPairs = std::vector<std::pair<std::string, std::string>>;

// csv: resolved config as leading `# key=value` lines, then
// `scheme,blocked,disruptions_total,disruptions_avg,unutilized_avg,seed,predictor`.
void WriteMetricsCsv(std::ostream& out, std::span<const Metrics> metrics,
                     const ConfigPairs& config);
void WriteMetricsJson(std::ostream& out, std::span<const Metrics> metrics,
                      const ConfigPairs& config);
// Rows: blocked connections, disruptions (avg per connection), unutilized
// FSs; one column per scheme.
std::string FormatMetricsTable(std::span<const Metrics> metrics);

void WriteAdjustmentLogCsv(std::ostream& out,
                           std::span<const AdjustmentEvent> log,
                           const ConfigPairs& config);

// The fields `compare` reads back from a metrics file.
struct MetricsRow {
  std::string scheme;
  long blocked = 0;
  long disruptions_total = 0;
  double disruptions_avg = 0.0;
  double unutilized_avg = 0.0;
  std::uint64_t seed = 0;
  std::string predictor;
};

// Reads a metrics file written by WriteMetricsCsv or WriteMetricsJson
// (chosen by extension).
std::vector<MetricsRow> ReadMetricsFile(const std::filesystem::path& path);

// Side-by-side deltas for the schemes present in both files.
std::string FormatComparison(std::span<const MetricsRow> baseline,
                             std::span<const MetricsRow> candidate);

}  // namespace eonplan

#endif  // EONPLAN_REPORT_HPP_
