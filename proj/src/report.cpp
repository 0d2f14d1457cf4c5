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

#include "eonplan/report.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "eonplan/csv.hpp"
#include "eonplan/error.hpp"

namespace eonplan {
namespace {

void WriteConfigComment(std::ostream& out, const ConfigPairs& config) {
  for (const auto& [k, v] : config) out << "# " << k << '=' << v << '\n';
}

std::string Fixed(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

}  // namespace

void WriteMetricsCsv(std::ostream& out, std::span<const Metrics> metrics,
                     const ConfigPairs& config) {
  WriteConfigComment(out, config);
  out << "scheme,blocked,disruptions_total,disruptions_avg,unutilized_avg,"
         "seed,predictor\n";
  for (const auto& m : metrics) {
    out << SchemeToken(m.scheme) << ',' << m.blocked_connections << ','
        << m.disruptions_total << ',' << csv::FormatDouble(m.disruptions_avg)
        << ',' << csv::FormatDouble(m.unutilized_fs_avg) << ',' << m.seed
        << ',' << csv::Escape(m.predictor) << '\n';
  }
}

void WriteMetricsJson(std::ostream& out, std::span<const Metrics> metrics,
                      const ConfigPairs& config) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [k, v] : config) cfg[k] = v;
  doc["config"] = cfg;
  doc["results"] = nlohmann::ordered_json::array();
  for (const auto& m : metrics) {
    doc["results"].push_back({
        {"scheme", SchemeToken(m.scheme)},
        {"blocked", m.blocked_connections},
        {"disruptions_total", m.disruptions_total},
        {"disruptions_avg", m.disruptions_avg},
        {"unutilized_avg", m.unutilized_fs_avg},
        {"seed", m.seed},
        {"predictor", m.predictor},
        {"connections", m.connections},
        {"intervals", m.intervals},
        {"fluctuation_samples", m.fluctuation_samples},
        {"replan_every", m.replan_every},
        {"plan_reallocations", m.plan_reallocations},
        {"fluctuation_expansions", m.fluctuation_expansions},
        {"fluctuation_reallocations", m.fluctuation_reallocations},
        {"block_changes", m.block_changes},
        {"scale", m.scale},
    });
  }
  out << doc.dump(2) << '\n';
}

std::string FormatMetricsTable(std::span<const Metrics> metrics) {
  constexpr int kLabel = 22;
  constexpr int kCol = 10;
  std::ostringstream s;
  s << std::left << std::setw(kLabel) << "";
  for (const auto& m : metrics) {
    s << std::right << std::setw(kCol) << SchemeName(m.scheme);
  }
  s << '\n';
  auto row = [&](const char* label, auto value) {
    s << std::left << std::setw(kLabel) << label;
    for (const auto& m : metrics) s << std::right << std::setw(kCol) << value(m);
    s << '\n';
  };
  row("Blocked Connections",
      [](const Metrics& m) { return std::to_string(m.blocked_connections); });
  row("Disruptions", [](const Metrics& m) { return Fixed(m.disruptions_avg, 2); });
  row("Unutilized FSs",
      [](const Metrics& m) { return Fixed(m.unutilized_fs_avg, 2); });
  return s.str();
}

void WriteAdjustmentLogCsv(std::ostream& out,
                           std::span<const AdjustmentEvent> log,
                           const ConfigPairs& config) {
  WriteConfigComment(out, config);
  out << "epoch,fluctuation,connection,event,old_start,old_width,new_start,"
         "new_width\n";
  for (const auto& e : log) {
    out << e.epoch << ',' << e.fluctuation << ',' << e.connection << ','
        << EventKindName(e.kind) << ',' << e.old_start << ',' << e.old_width
        << ',' << e.new_start << ',' << e.new_width << '\n';
  }
}

std::vector<MetricsRow> ReadMetricsFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open metrics file: " + path.string());
  std::vector<MetricsRow> rows;
  if (path.extension() == ".json") {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
      for (const auto& r : doc.at("results")) {
        rows.push_back(MetricsRow{r.at("scheme").get<std::string>(),
                                  r.at("blocked").get<long>(),
                                  r.at("disruptions_total").get<long>(),
                                  r.at("disruptions_avg").get<double>(),
                                  r.at("unutilized_avg").get<double>(),
                                  r.at("seed").get<std::uint64_t>(),
                                  r.at("predictor").get<std::string>()});
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path.string() + ": " + e.what());
    }
    return rows;
  }

  // Skip the config comment block, then parse the csv body.
  std::string body;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() == '#') continue;
    body += line;
    body += '\n';
  }
  std::istringstream stream(body);
  csv::Reader reader(stream);
  std::vector<std::string> f;
  if (!reader.Next(f) || f.size() != 7 || f[0] != "scheme") {
    throw ParseError(path.string() + ": not a metrics csv");
  }
  while (reader.Next(f)) {
    const std::string where = path.string() + " row " + std::to_string(rows.size() + 1);
    if (f.size() != 7) throw ParseError(where + ": expected 7 fields");
    rows.push_back(MetricsRow{f[0], csv::ParseInt(f[1], where),
                              csv::ParseInt(f[2], where),
                              csv::ParseDouble(f[3], where),
                              csv::ParseDouble(f[4], where),
                              static_cast<std::uint64_t>(csv::ParseInt(f[5], where)),
                              f[6]});
  }
  return rows;
}

std::string FormatComparison(std::span<const MetricsRow> baseline,
                             std::span<const MetricsRow> candidate) {
  auto pct = [](double a, double b) -> std::string {
    if (a == 0.0) return b == 0.0 ? "0.0%" : "n/a";
    return Fixed(100.0 * (b - a) / a, 1) + "%";
  };
  std::ostringstream s;
  s << std::left << std::setw(8) << "scheme" << std::right << std::setw(14)
    << "blocked" << std::setw(24) << "disruptions_avg" << std::setw(24)
    << "unutilized_avg" << '\n';
  std::size_t matched = 0;
  for (const auto& a : baseline) {
    for (const auto& b : candidate) {
      if (a.scheme != b.scheme) continue;
      ++matched;
      s << std::left << std::setw(8) << a.scheme << std::right << std::setw(14)
        << (std::to_string(a.blocked) + "->" + std::to_string(b.blocked))
        << std::setw(24)
        << (Fixed(a.disruptions_avg, 2) + "->" + Fixed(b.disruptions_avg, 2) +
            " (" + pct(a.disruptions_avg, b.disruptions_avg) + ")")
        << std::setw(24)
        << (Fixed(a.unutilized_avg, 2) + "->" + Fixed(b.unutilized_avg, 2) +
            " (" + pct(a.unutilized_avg, b.unutilized_avg) + ")")
        << '\n';
    }
  }
  if (matched == 0) s << "(no scheme in common)\n";
  return s.str();
}

}  // namespace eonplan
