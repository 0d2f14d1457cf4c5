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

#include "eonplan/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

#include "eonplan/csv.hpp"
#include "eonplan/error.hpp"

namespace eonplan {

const std::vector<std::string>& AbileneNodeIds() {
  static const std::vector<std::string> ids = {
      "ATLAM5", "ATLAng", "CHINng", "DNVRng", "HSTNng", "IPLSng",
      "KSCYng", "LOSAng", "NYCMng", "SNVAng", "STTLng", "WASHng"};
  return ids;
}

DemandSeries GenerateDemands(const SyntheticTraceOptions& options) {
  const std::size_t n = options.nodes.size();
  if (n < 2) throw ConfigError("synthetic trace needs at least two nodes");
  if (!(options.base_period_min > 0.0)) {
    throw ConfigError("synthetic trace base period must be positive");
  }

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  const double per_day = 1440.0 / options.base_period_min;

  std::vector<double> pair_scale(n * n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t d = 0; d < n; ++d) {
      if (s != d) {
        pair_scale[s * n + d] =
            options.mean_pair_gbps * std::exp(0.5 * normal(rng) - 0.125);
      }
    }
  }
  std::vector<double> phase(n), amplitude(n);
  for (std::size_t s = 0; s < n; ++s) {
    phase[s] = 2.0 * std::numbers::pi * (0.55 + 0.1 * uniform(rng));
    amplitude[s] = options.daily_amplitude * (0.7 + 0.6 * uniform(rng));
  }

  // AR(1) log-noise: slow per-source component, faster per-pair component.
  constexpr double kSourcePhi = 0.985;
  constexpr double kSourceSigma = 0.045;
  constexpr double kPairPhi = 0.9;
  constexpr double kPairSigma = 0.06;
  std::vector<double> source_state(n, 0.0);
  std::vector<double> pair_state(n * n, 0.0);

  DemandSeries out;
  out.nodes = options.nodes;
  out.samples = options.samples;
  out.base_period_min = options.base_period_min;
  out.start_time_s = options.start_time_s;
  out.values.assign(options.samples * n * n, 0.0);

  for (std::size_t t = 0; t < options.samples; ++t) {
    const double day_pos = static_cast<double>(t) / per_day;
    const auto weekday = static_cast<long>(std::floor(day_pos)) % 7;
    const double weekly = (weekday == 5 || weekday == 6) ? 0.8 : 1.0;
    for (std::size_t s = 0; s < n; ++s) {
      source_state[s] = kSourcePhi * source_state[s] + kSourceSigma * normal(rng);
      const double daily =
          1.0 + amplitude[s] *
                    std::sin(2.0 * std::numbers::pi * day_pos + phase[s]);
      const double jitter = options.jitter_sigma * normal(rng);
      for (std::size_t d = 0; d < n; ++d) {
        if (s == d) continue;
        double& state = pair_state[s * n + d];
        state = kPairPhi * state + kPairSigma * normal(rng);
        const double v = pair_scale[s * n + d] * daily * weekly *
                         std::exp(source_state[s] + state + jitter);
        out.values[(t * n + s) * n + d] = std::max(0.0, v);
      }
    }
  }
  return out;
}

void WriteDemandsCsv(std::ostream& out, const DemandSeries& demands) {
  const std::size_t n = demands.nodes.size();
  const auto step =
      static_cast<std::int64_t>(std::llround(demands.base_period_min * 60.0));
  out << "timestamp,src,dst,gbps\n";
  for (std::size_t t = 0; t < demands.samples; ++t) {
    const auto ts = demands.start_time_s + step * static_cast<std::int64_t>(t);
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t d = 0; d < n; ++d) {
        if (s == d) continue;
        out << ts << ',' << csv::Escape(demands.nodes[s]) << ','
            << csv::Escape(demands.nodes[d]) << ','
            << csv::FormatDouble(demands.at(t, s, d)) << '\n';
      }
    }
  }
}

TraceSet AggregateDemands(const DemandSeries& demands) {
  const std::size_t n = demands.nodes.size();
  // Destinations are summed in id order, matching the csv parser.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return demands.nodes[a] < demands.nodes[b];
  });
  TraceSet out;
  for (std::size_t s = 0; s < n; ++s) {
    TrafficTrace& trace = out[demands.nodes[s]];
    trace.source_id = demands.nodes[s];
    trace.base_period_min = demands.base_period_min;
    trace.start_time_s = demands.start_time_s;
    trace.samples.assign(demands.samples, 0.0);
    for (std::size_t t = 0; t < demands.samples; ++t) {
      double sum = 0.0;
      for (std::size_t d : order) {
        if (d != s) sum += demands.at(t, s, d);
      }
      trace.samples[t] = sum;
    }
  }
  return out;
}

}  // namespace eonplan
