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

#ifndef EONPLAN_PLANNER_HPP_
#define EONPLAN_PLANNER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eonplan/modulation.hpp"
#include "eonplan/predictor.hpp"
#include "eonplan/routing.hpp"
#include "eonplan/spectrum.hpp"
#include "eonplan/topology.hpp"
#include "eonplan/trace.hpp"
#include "eonplan/windowing.hpp"

namespace eonplan {

enum class Scheme { kMmd, kMad, kSsd };

// Accepts mmd/mad/ssd, case-insensitive, with or without the "-sa" suffix.
Scheme ParseScheme(std::string_view text);
std::string_view SchemeName(Scheme scheme);   // "MMD-SA"
std::string_view SchemeToken(Scheme scheme);  // "mmd"
std::vector<Scheme> ParseSchemeList(std::string_view text);

struct PlanningParams {
  WindowShape shape;
  int slots = 320;
  double baud_gbaud = 10.5;
  int guard_slots = 0;
  int kappa = 3;
  double scale = 50.0;
  std::uint64_t seed = 1;
  std::size_t patterns = 800;
  double train_fraction = 0.8;
  // Plan cadence of MMD/MAD in intervals; unset means every u intervals.
  std::optional<int> replan_every;

  void Validate() const;
};

// A connection together with its candidate routes and the modulation fixed
// by the longest candidate.
struct RoutedConnection {
  Connection connection;
  std::vector<Path> candidates;
  double longest_km = 0.0;
  int bits_per_symbol = 1;
  bool out_of_reach = false;
};

// One connection per source (in id order); each destination is drawn
// uniformly among the other topology nodes with a generator seeded by `seed`.
std::vector<Connection> DrawConnections(std::span<const std::string> sources,
                                        const Topology& topology,
                                        std::uint64_t seed);

std::vector<RoutedConnection> RouteConnections(
    const Topology& topology, std::span<const Connection> connections,
    int kappa, const ModulationTable& modulation);

// slots[c][i]: required slots of connection c for interval epoch + 1 + i.
using SlotMatrix = std::vector<std::vector<int>>;

SlotMatrix SlotsMatrix(const PredictionMatrix& prediction,
                       std::span<const RoutedConnection> connections,
                       double baud_gbaud, int guard_slots);

struct PlanDecision {
  std::size_t epoch = 0;
  Scheme scheme = Scheme::kMmd;
  std::vector<int> target_width;
  std::optional<int> mad_interval;  // 1-based, MAD only
  std::vector<long> aggregate;      // per-interval column sums, MAD only
};

PlanDecision PlanMmd(const SlotMatrix& slots, std::size_t epoch = 0);
PlanDecision PlanMad(const SlotMatrix& slots, std::size_t epoch = 0);
PlanDecision PlanSsd(const SlotMatrix& slots, std::size_t epoch = 0);
PlanDecision Plan(Scheme scheme, const SlotMatrix& slots, std::size_t epoch = 0);

enum class EventKind {
  kPlace,
  kReduce,
  kExpand,
  kReallocate,
  kReallocateSamePlace,
  kBlocked,
};

std::string_view EventKindName(EventKind kind);

struct AdjustmentEvent {
  std::size_t epoch = 0;
  int fluctuation = -1;  // -1 at a plan boundary
  ConnectionId connection = 0;
  EventKind kind = EventKind::kPlace;
  int old_start = 0;
  int old_width = 0;
  int new_start = 0;
  int new_width = 0;
};

// Moves every lightpath to its planned width, in connection order: reduce
// when shrinking, otherwise expand, else re-allocate (a disruption), else
// record a blocked event. Dormant lightpaths are placed with first-fit
// without a disruption.
std::vector<AdjustmentEvent> ApplyPlan(
    SpectrumGrid& grid, std::vector<Lightpath>& lightpaths,
    std::span<const RoutedConnection> connections, const PlanDecision& decision);

struct Metrics {
  Scheme scheme = Scheme::kMmd;
  long blocked_connections = 0;
  long disruptions_total = 0;
  double disruptions_avg = 0.0;
  double unutilized_fs_avg = 0.0;
  std::size_t connections = 0;
  std::size_t intervals = 0;
  std::size_t fluctuation_samples = 0;
  long plan_reallocations = 0;
  long fluctuation_expansions = 0;
  long fluctuation_reallocations = 0;
  // Reductions, expansions and moves that changed a block's (start, width).
  long block_changes = 0;
  int replan_every = 1;
  std::uint64_t seed = 0;
  std::string predictor;
  double scale = 0.0;
};

// Immutable inputs shared by every run of a comparison.
struct Scenario {
  Topology topology;
  TraceSet traces;  // cut to the study window
  ModulationTable modulation;
  PlanningParams params;
  std::vector<RoutedConnection> connections;
  std::vector<std::size_t> test_epochs;

  std::vector<std::string> sources() const;
};

// Cuts each trace to the first `patterns` windows, draws and routes the
// connections, and derives the test epochs from the chronological split.
Scenario BuildScenario(Topology topology, const TraceSet& traces,
                       ModulationTable modulation, const PlanningParams& params);

struct SimulationOptions {
  bool audit = false;      // audit the grid after every change
  bool keep_log = true;
};

struct SimulationResult {
  Metrics metrics;
  std::vector<AdjustmentEvent> log;
  std::vector<PlanDecision> plans;
  std::vector<Lightpath> final_lightpaths;
};

int ReplanCadence(Scheme scheme, const PlanningParams& params);

// Runs one scheme over the test window against the true fluctuations.
SimulationResult Simulate(const Scenario& scenario,
                          const PredictorGateway& predictor, Scheme scheme,
                          const SimulationOptions& options = {});

}  // namespace eonplan

#endif  // EONPLAN_PLANNER_HPP_
