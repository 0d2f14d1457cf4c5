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

#ifndef EONPLAN_SYNTHETIC_HPP_
#define EONPLAN_SYNTHETIC_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "eonplan/trace.hpp"

namespace eonplan {

// Seeded generator of backbone-like traffic matrices at a fixed sampling
// period. Each (src, dst) demand follows a daily cycle with a per-source
// phase, a weekday/weekend factor, a slow AR(1) log-noise shared by the
// source, a per-pair AR(1) log-noise, and white 5-minute jitter.
struct SyntheticTraceOptions {
  std::vector<std::string> nodes;
  std::size_t samples = 4896;  // 17 days of 5-minute samples
  double base_period_min = 5.0;
  std::int64_t start_time_s = 1078099200;  // 2004-03-01T00:00:00Z
  double mean_pair_gbps = 0.14;
  double daily_amplitude = 0.45;
  double jitter_sigma = 0.12;
  std::uint64_t seed = 2004;
};

struct DemandSeries {
  std::vector<std::string> nodes;
  std::size_t samples = 0;
  double base_period_min = 5.0;
  std::int64_t start_time_s = 0;
  // values[(t * n + src) * n + dst], Gbps; diagonal is zero.
  std::vector<double> values;

  double at(std::size_t t, std::size_t src, std::size_t dst) const {
    return values[(t * nodes.size() + src) * nodes.size() + dst];
  }
};

DemandSeries GenerateDemands(const SyntheticTraceOptions& options);

// Rows `timestamp,src,dst,gbps` for every off-diagonal cell.
void WriteDemandsCsv(std::ostream& out, const DemandSeries& demands);

// Per-source aggregation, identical to parsing the csv written above.
TraceSet AggregateDemands(const DemandSeries& demands);

// The twelve Abilene router ids as used by SNDlib.
const std::vector<std::string>& AbileneNodeIds();

}  // namespace eonplan

#endif  // EONPLAN_SYNTHETIC_HPP_
