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

#include "eonplan/predictor.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "eonplan/csv.hpp"
#include "eonplan/error.hpp"

namespace eonplan {

PredictorSpec PredictorSpec::Parse(std::string_view text) {
  text = csv::Trim(text);
  PredictorSpec spec;
  if (text == "oracle") {
    spec.kind = PredictorKind::kOracle;
  } else if (text == "persistence") {
    spec.kind = PredictorKind::kPersistence;
  } else if (text.starts_with("file:") && text.size() > 5) {
    spec.kind = PredictorKind::kFile;
    spec.file = std::filesystem::path(std::string(text.substr(5)));
  } else {
    throw ConfigError("predictor must be oracle, persistence or file:PATH (got '" +
                      std::string(text) + "')");
  }
  return spec;
}

std::string PredictorSpec::ToString() const {
  switch (kind) {
    case PredictorKind::kOracle:
      return "oracle";
    case PredictorKind::kPersistence:
      return "persistence";
    case PredictorKind::kFile:
      return "file:" + file.string();
  }
  return "?";
}

PredictionTable PredictionTable::Read(std::istream& in, std::string_view name) {
  csv::Reader reader(in);
  std::vector<std::string> row;
  if (!reader.Next(row)) {
    throw ParseError(std::string(name) + ": empty predictions file");
  }
  if (row.size() != 4 || csv::Trim(row[0]) != "source_id" ||
      csv::Trim(row[1]) != "t_index" || csv::Trim(row[2]) != "step" ||
      csv::Trim(row[3]) != "predicted_gbps") {
    throw ParseError(std::string(name) +
                     " line 1: header must be "
                     "source_id,t_index,step,predicted_gbps");
  }
  PredictionTable table;
  while (reader.Next(row)) {
    const std::string where =
        std::string(name) + " line " + std::to_string(reader.line());
    if (row.size() != 4) throw ParseError(where + ": expected 4 fields");
    const std::string source(csv::Trim(row[0]));
    const long long t = csv::ParseInt(row[1], where);
    const long long step = csv::ParseInt(row[2], where);
    const double v = csv::ParseDouble(row[3], where);
    if (source.empty()) throw ParseError(where + ": empty source_id");
    if (t < 0 || step < 1) {
      throw ValidationError(where + ": t_index must be >= 0 and step >= 1");
    }
    if (!std::isfinite(v) || v < 0.0) {
      throw ValidationError(where + ": prediction must be finite and >= 0");
    }
    if (table.Find(source, static_cast<std::size_t>(t), static_cast<int>(step))) {
      throw ValidationError(where + ": duplicate row for (" + source + ", " +
                            std::to_string(t) + ", " + std::to_string(step) +
                            ")");
    }
    table.Set(source, static_cast<std::size_t>(t), static_cast<int>(step), v);
  }
  return table;
}

PredictionTable PredictionTable::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open predictions file: " + path.string());
  return Read(in, path.string());
}

void PredictionTable::Set(const std::string& source, std::size_t t_index,
                          int step, double gbps) {
  values_[Key{source, t_index, step}] = gbps;
}

const double* PredictionTable::Find(const std::string& source,
                                    std::size_t t_index, int step) const {
  auto it = values_.find(Key{source, t_index, step});
  return it == values_.end() ? nullptr : &it->second;
}

void PredictionTable::Write(std::ostream& out) const {
  out << "source_id,t_index,step,predicted_gbps\n";
  for (const auto& [key, v] : values_) {
    out << csv::Escape(std::get<0>(key)) << ',' << std::get<1>(key) << ','
        << std::get<2>(key) << ',' << csv::FormatDouble(v) << '\n';
  }
}

PredictorGateway::PredictorGateway(PredictorKind kind, const WindowShape& shape,
                                   double scale)
    : kind_(kind), shape_(shape), scale_(scale) {
  shape_.Validate();
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw ConfigError("bit-rate scale must be positive");
  }
}

PredictorGateway PredictorGateway::Oracle(std::shared_ptr<const TraceSet> traces,
                                          const WindowShape& shape,
                                          double scale) {
  PredictorGateway g(PredictorKind::kOracle, shape, scale);
  g.traces_ = std::move(traces);
  return g;
}

PredictorGateway PredictorGateway::Persistence(
    std::shared_ptr<const TraceSet> traces, const WindowShape& shape,
    double scale) {
  PredictorGateway g(PredictorKind::kPersistence, shape, scale);
  g.traces_ = std::move(traces);
  return g;
}

PredictorGateway PredictorGateway::FromTable(PredictionTable table,
                                             const WindowShape& shape,
                                             double scale) {
  PredictorGateway g(PredictorKind::kFile, shape, scale);
  g.table_ = std::make_shared<const PredictionTable>(std::move(table));
  return g;
}

std::string PredictorGateway::name() const {
  switch (kind_) {
    case PredictorKind::kOracle:
      return "oracle";
    case PredictorKind::kPersistence:
      return "persistence";
    case PredictorKind::kFile:
      return "file";
  }
  return "?";
}

std::vector<double> PredictorGateway::PredictSource(const std::string& source,
                                                    std::size_t epoch) const {
  const int u = shape_.horizon;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(u));
  if (kind_ == PredictorKind::kFile) {
    for (int step = 1; step <= u; ++step) {
      const double* v = table_->Find(source, epoch, step);
      if (!v) {
        throw CoverageError("predictions missing (" + source + ", " +
                            std::to_string(epoch) + ", " +
                            std::to_string(step) + ")");
      }
      out.push_back(*v);
    }
    return out;
  }
  auto it = traces_->find(source);
  if (it == traces_->end()) {
    throw ConfigError("no trace for source " + source);
  }
  const TrafficTrace& trace = it->second;
  const std::size_t intervals = IntervalCount(trace.size(), shape_);
  if (kind_ == PredictorKind::kOracle) {
    if (epoch + static_cast<std::size_t>(u) >= intervals) {
      throw HorizonError("oracle epoch " + std::to_string(epoch) +
                         " needs interval " + std::to_string(epoch + u) +
                         "; trace " + source + " has " +
                         std::to_string(intervals));
    }
    for (int step = 1; step <= u; ++step) {
      out.push_back(IntervalMax(trace, shape_.fluctuations,
                                epoch + static_cast<std::size_t>(step)));
    }
    return out;
  }
  if (epoch >= intervals) {
    throw HorizonError("persistence epoch " + std::to_string(epoch) +
                       " is past the end of trace " + source);
  }
  out.assign(static_cast<std::size_t>(u),
             IntervalMax(trace, shape_.fluctuations, epoch));
  return out;
}

PredictionMatrix PredictorGateway::Predict(
    std::size_t epoch, std::span<const Connection> connections) const {
  PredictionMatrix m;
  m.epoch = epoch;
  for (const auto& c : connections) {
    auto row = PredictSource(c.source, epoch);
    for (double& v : row) v *= scale_;
    m.rows.emplace(c.id, std::move(row));
  }
  return m;
}

void PredictorGateway::CheckCoverage(std::span<const std::size_t> epochs,
                                     std::span<const std::string> sources) const {
  if (kind_ != PredictorKind::kFile) {
    for (const auto& s : sources) {
      for (std::size_t e : epochs) PredictSource(s, e);
    }
    return;
  }
  std::size_t missing = 0;
  std::string listing;
  for (const auto& s : sources) {
    for (std::size_t e : epochs) {
      for (int step = 1; step <= shape_.horizon; ++step) {
        if (table_->Find(s, e, step)) continue;
        if (++missing <= 20) {
          listing += " (" + s + ", " + std::to_string(e) + ", " +
                     std::to_string(step) + ")";
        }
      }
    }
  }
  if (missing) {
    throw CoverageError("predictions file misses " + std::to_string(missing) +
                        " (source, epoch, step) cells:" + listing +
                        (missing > 20 ? " ..." : ""));
  }
}

void ExportPredictions(std::ostream& out, const PredictorGateway& gateway,
                       std::span<const std::size_t> epochs,
                       std::span<const std::string> sources) {
  PredictionTable table;
  for (const auto& s : sources) {
    for (std::size_t e : epochs) {
      const auto row = gateway.PredictSource(s, e);
      for (std::size_t i = 0; i < row.size(); ++i) {
        table.Set(s, e, static_cast<int>(i + 1), row[i]);
      }
    }
  }
  table.Write(out);
}

}  // namespace eonplan
