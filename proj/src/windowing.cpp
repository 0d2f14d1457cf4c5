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

#include "eonplan/windowing.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "eonplan/csv.hpp"
#include "eonplan/error.hpp"

namespace eonplan {

void WindowShape::Validate() const {
  if (past < 1 || fluctuations < 1 || horizon < 1) {
    throw ConfigError("window shape needs r, k, u >= 1 (got r=" +
                      std::to_string(past) + ", k=" +
                      std::to_string(fluctuations) + ", u=" +
                      std::to_string(horizon) + ")");
  }
}

std::size_t IntervalCount(std::size_t samples, const WindowShape& shape) {
  return samples / static_cast<std::size_t>(shape.fluctuations);
}

std::size_t WindowCount(std::size_t samples, const WindowShape& shape) {
  const std::size_t intervals = IntervalCount(samples, shape);
  const auto span = static_cast<std::size_t>(shape.past + shape.horizon);
  return intervals > span ? intervals - span : 0;
}

std::size_t SamplesForPatterns(std::size_t patterns, const WindowShape& shape) {
  return (patterns + static_cast<std::size_t>(shape.past + shape.horizon)) *
         static_cast<std::size_t>(shape.fluctuations);
}

double IntervalMax(const TrafficTrace& trace, int fluctuations,
                   std::size_t interval) {
  const auto k = static_cast<std::size_t>(fluctuations);
  const std::size_t first = interval * k;
  if (first + k > trace.size()) {
    throw HorizonError("interval " + std::to_string(interval) +
                       " is beyond the end of trace " + trace.source_id);
  }
  return *std::max_element(
      trace.samples.begin() + static_cast<std::ptrdiff_t>(first),
      trace.samples.begin() + static_cast<std::ptrdiff_t>(first + k));
}

std::vector<WindowSample> BuildDataset(const TrafficTrace& trace,
                                       const WindowShape& shape) {
  shape.Validate();
  const std::size_t count = WindowCount(trace.size(), shape);
  if (count == 0) {
    throw SizeError("trace " + trace.source_id + " has " +
                    std::to_string(trace.size()) + " samples; a window needs " +
                    std::to_string(SamplesForPatterns(1, shape)));
  }
  const auto k = static_cast<std::size_t>(shape.fluctuations);
  const auto r = static_cast<std::size_t>(shape.past);
  const auto u = static_cast<std::size_t>(shape.horizon);

  std::vector<WindowSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    WindowSample s;
    s.t_index = r + i;
    const std::size_t first = (s.t_index - r) * k;
    s.chi.assign(trace.samples.begin() + static_cast<std::ptrdiff_t>(first),
                 trace.samples.begin() +
                     static_cast<std::ptrdiff_t>(first + shape.chi_size()));
    s.psi.reserve(u);
    for (std::size_t j = 1; j <= u; ++j) {
      s.psi.push_back(IntervalMax(trace, shape.fluctuations, s.t_index + j));
    }
    out.push_back(std::move(s));
  }
  return out;
}

Normalizer::Normalizer(double min, double max) : min_(min), max_(max) {
  if (!std::isfinite(min) || !std::isfinite(max) || !(min < max)) {
    throw NormalizationError("normalizer needs finite min < max (got " +
                             csv::FormatDouble(min) + ", " +
                             csv::FormatDouble(max) + ")");
  }
}

Normalizer Normalizer::Fit(std::span<const WindowSample> training) {
  if (training.empty()) {
    throw NormalizationError("cannot fit a normalizer on an empty split");
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& s : training) {
    for (double v : s.chi) lo = std::min(lo, v), hi = std::max(hi, v);
    for (double v : s.psi) lo = std::min(lo, v), hi = std::max(hi, v);
  }
  if (!(lo < hi)) {
    throw NormalizationError("constant series: min == max == " +
                             csv::FormatDouble(lo));
  }
  return Normalizer(lo, hi);
}

WindowSample Normalizer::Apply(const WindowSample& sample) const {
  WindowSample out = sample;
  for (double& v : out.chi) v = Apply(v);
  for (double& v : out.psi) v = Apply(v);
  return out;
}

DatasetSplit SplitDataset(std::span<const WindowSample> dataset,
                          double train_fraction) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw ConfigError("train fraction must lie in (0, 1), got " +
                      csv::FormatDouble(train_fraction));
  }
  if (dataset.empty()) throw SizeError("cannot split an empty dataset");
  const auto n_train = static_cast<std::size_t>(
      std::floor(static_cast<double>(dataset.size()) * train_fraction));
  DatasetSplit out;
  out.train.assign(dataset.begin(),
                   dataset.begin() + static_cast<std::ptrdiff_t>(n_train));
  out.test.assign(dataset.begin() + static_cast<std::ptrdiff_t>(n_train),
                  dataset.end());
  return out;
}

void WriteDatasetCsv(std::ostream& out, std::span<const WindowSample> samples,
                     const WindowShape& shape) {
  out << "t_index";
  for (std::size_t i = 0; i < shape.chi_size(); ++i) out << ",chi_" << i;
  for (int j = 0; j < shape.horizon; ++j) out << ",psi_" << j;
  out << '\n';
  for (const auto& s : samples) {
    out << s.t_index;
    for (double v : s.chi) out << ',' << csv::FormatDouble(v);
    for (double v : s.psi) out << ',' << csv::FormatDouble(v);
    out << '\n';
  }
}

std::vector<WindowSample> ReadDatasetCsv(std::istream& in,
                                         const WindowShape& shape) {
  csv::Reader reader(in);
  std::vector<std::string> row;
  if (!reader.Next(row)) throw ParseError("dataset csv: empty file");
  const std::size_t width =
      1 + shape.chi_size() + static_cast<std::size_t>(shape.horizon);
  if (row.size() != width || csv::Trim(row[0]) != "t_index") {
    throw ParseError("dataset csv line 1: expected t_index plus " +
                     std::to_string(width - 1) + " value columns");
  }
  std::vector<WindowSample> out;
  while (reader.Next(row)) {
    const std::string where = "dataset csv line " + std::to_string(reader.line());
    if (row.size() != width) throw ParseError(where + ": wrong field count");
    WindowSample s;
    s.t_index = static_cast<std::size_t>(csv::ParseInt(row[0], where));
    for (std::size_t i = 0; i < shape.chi_size(); ++i) {
      s.chi.push_back(csv::ParseDouble(row[1 + i], where));
    }
    for (int j = 0; j < shape.horizon; ++j) {
      s.psi.push_back(csv::ParseDouble(
          row[1 + shape.chi_size() + static_cast<std::size_t>(j)], where));
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace eonplan
