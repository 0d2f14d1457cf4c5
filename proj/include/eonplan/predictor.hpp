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

#ifndef EONPLAN_PREDICTOR_HPP_
#define EONPLAN_PREDICTOR_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "eonplan/spectrum.hpp"
#include "eonplan/trace.hpp"
#include "eonplan/windowing.hpp"

namespace eonplan {

struct Connection {
  ConnectionId id = 0;
  std::string source;
  std::string destination;
};

// Predicted bit-rates (Gbps, already scaled) for planning epoch `epoch`:
// rows[c][i] is the prediction for interval epoch + 1 + i.
struct PredictionMatrix {
  std::size_t epoch = 0;
  std::map<ConnectionId, std::vector<double>> rows;

  friend bool operator==(const PredictionMatrix&,
                         const PredictionMatrix&) = default;
};

enum class PredictorKind { kFile, kOracle, kPersistence };

struct PredictorSpec {
  PredictorKind kind = PredictorKind::kOracle;
  std::filesystem::path file;

  // "oracle", "persistence" or "file:PATH".
  static PredictorSpec Parse(std::string_view text);
  std::string ToString() const;
};

// Contents of a predictions interchange file
// (`source_id,t_index,step,predicted_gbps`, step is 1-based).
class PredictionTable {
 public:
  using Key = std::tuple<std::string, std::size_t, int>;

  // Throws ParseError on malformed rows and ValidationError on negative,
  // non-finite or duplicate entries.
  static PredictionTable Read(std::istream& in,
                              std::string_view name = "<stream>");
  static PredictionTable Load(const std::filesystem::path& path);

  void Set(const std::string& source, std::size_t t_index, int step,
           double gbps);
  const double* Find(const std::string& source, std::size_t t_index,
                     int step) const;
  std::size_t size() const { return values_.size(); }

  void Write(std::ostream& out) const;

 private:
  std::map<Key, double> values_;
};

// Uniform predictor contract for the planner. All backends return native
// Gbps multiplied by `scale`. Read-only after construction.
class PredictorGateway {
 public:
  static PredictorGateway Oracle(std::shared_ptr<const TraceSet> traces,
                                 const WindowShape& shape, double scale);
  static PredictorGateway Persistence(std::shared_ptr<const TraceSet> traces,
                                      const WindowShape& shape, double scale);
  static PredictorGateway FromTable(PredictionTable table,
                                    const WindowShape& shape, double scale);

  PredictorKind kind() const { return kind_; }
  std::string name() const;
  double scale() const { return scale_; }
  int horizon() const { return shape_.horizon; }

  // u predictions for one source at `epoch`, before scaling.
  std::vector<double> PredictSource(const std::string& source,
                                    std::size_t epoch) const;

  PredictionMatrix Predict(std::size_t epoch,
                           std::span<const Connection> connections) const;

  // Verifies every (source, epoch, step) cell is available. Throws
  // CoverageError (file backend) listing missing cells, or HorizonError
  // (trace backends) when an epoch needs intervals past the trace end.
  void CheckCoverage(std::span<const std::size_t> epochs,
                     std::span<const std::string> sources) const;

 private:
  PredictorGateway(PredictorKind kind, const WindowShape& shape, double scale);

  PredictorKind kind_;
  WindowShape shape_;
  double scale_;
  std::shared_ptr<const TraceSet> traces_;
  std::shared_ptr<const PredictionTable> table_;
};

// Writes the predictions of `gateway` (unscaled) for every source and epoch
// in interchange form.
void ExportPredictions(std::ostream& out, const PredictorGateway& gateway,
                       std::span<const std::size_t> epochs,
                       std::span<const std::string> sources);

}  // namespace eonplan

#endif  // EONPLAN_PREDICTOR_HPP_
