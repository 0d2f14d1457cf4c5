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

#ifndef EONPLAN_TRACE_HPP_
#define EONPLAN_TRACE_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace eonplan {

// Aggregated bit-rate series of one source node: sample i is the sum of the
// demands from `source_id` to every other node during the i-th base period.
struct TrafficTrace {
  std::string source_id;
  std::vector<double> samples;  // Gbps, non-negative
  double base_period_min = 5.0;
  std::int64_t start_time_s = 0;  // timestamp of samples[0], seconds

  std::size_t size() const { return samples.size(); }
  friend bool operator==(const TrafficTrace&, const TrafficTrace&) = default;
};

// Keyed and ordered by source node id.
using TraceSet = std::map<std::string, TrafficTrace>;

enum class TraceFormat { kCsv, kSndlibXml };

TraceFormat ParseTraceFormat(std::string_view name);

// Reads a traffic-matrix trace and aggregates it per source node. For
// kSndlibXml, `path` may be a single matrix file or a directory holding one
// matrix file per timestamp. Self-demands are ignored; missing
// (src, dst, t) cells count as 0 Gbps.
TraceSet ParseTraceFile(const std::filesystem::path& path, TraceFormat format);

// csv flavour: header `timestamp,src,dst,gbps` (any column order). Timestamps
// are integer seconds, ISO-8601 `YYYY-MM-DDTHH:MM[:SS]`, or SNDlib
// `YYYYMMDD-HHMM`.
TraceSet ParseTraceCsv(std::istream& in, std::string_view name = "<stream>");

TraceSet ParseSndlibTraffic(const std::filesystem::path& path);

// Contiguous sub-series; throws IndexError when first + count > size.
TrafficTrace Slice(const TrafficTrace& trace, std::size_t first,
                   std::size_t count);

// Writes each trace as demands from its source towards the pseudo node
// `sink_id`, so that parsing the output reproduces the same series.
void WriteTraceCsv(std::ostream& out, const TraceSet& traces,
                   std::string_view sink_id = "AGG");

// Throws ValidationError when a sample is negative or non-finite.
void ValidateTrace(const TrafficTrace& trace);

// Seconds since 1970-01-01T00:00:00 for any accepted timestamp spelling.
std::int64_t ParseTimestamp(std::string_view text);

}  // namespace eonplan

#endif  // EONPLAN_TRACE_HPP_
