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

#include "eonplan/planner.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>

#include "eonplan/csv.hpp"
#include "eonplan/error.hpp"

namespace eonplan {

Scheme ParseScheme(std::string_view text) {
  std::string t(csv::Trim(text));
  for (auto& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t.ends_with("-sa")) t.resize(t.size() - 3);
  if (t == "mmd") return Scheme::kMmd;
  if (t == "mad") return Scheme::kMad;
  if (t == "ssd") return Scheme::kSsd;
  throw ConfigError("unknown scheme '" + std::string(text) +
                    "' (expected mmd, mad or ssd)");
}

std::string_view SchemeName(Scheme scheme) {
  switch (scheme) {
    case Scheme::kMmd: return "MMD-SA";
    case Scheme::kMad: return "MAD-SA";
    case Scheme::kSsd: return "SSD-SA";
  }
  return "?";
}

std::string_view SchemeToken(Scheme scheme) {
  switch (scheme) {
    case Scheme::kMmd: return "mmd";
    case Scheme::kMad: return "mad";
    case Scheme::kSsd: return "ssd";
  }
  return "?";
}

std::vector<Scheme> ParseSchemeList(std::string_view text) {
  std::vector<Scheme> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto item = text.substr(pos, comma == std::string_view::npos
                                           ? std::string_view::npos
                                           : comma - pos);
    if (!csv::Trim(item).empty()) {
      const Scheme s = ParseScheme(item);
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw ConfigError("no scheme requested");
  return out;
}

void PlanningParams::Validate() const {
  shape.Validate();
  if (slots < 1) throw ConfigError("slots must be >= 1");
  if (!(baud_gbaud > 0.0)) throw ConfigError("baud must be positive");
  if (guard_slots < 0) throw ConfigError("guard_slots must be >= 0");
  if (kappa < 1) throw ConfigError("kappa must be >= 1");
  if (!(scale > 0.0)) throw ConfigError("scale must be positive");
  if (patterns < 2) throw ConfigError("patterns must be >= 2");
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw ConfigError("train_fraction must lie in (0, 1)");
  }
  if (replan_every && (*replan_every < 1 || *replan_every > shape.horizon)) {
    throw ConfigError("replan_every must lie in [1, u]");
  }
}

std::vector<Connection> DrawConnections(std::span<const std::string> sources,
                                        const Topology& topology,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Connection> out;
  for (const auto& src : sources) {
    const NodeIndex s = topology.node(src);
    std::vector<NodeIndex> others;
    for (NodeIndex n = 0; n < topology.node_count(); ++n) {
      if (n != s) others.push_back(n);
    }
    if (others.empty()) throw ConfigError("topology has a single node");
    const NodeIndex d = others[rng() % others.size()];
    out.push_back(Connection{static_cast<ConnectionId>(out.size()), src,
                             topology.node_id(d)});
  }
  return out;
}

std::vector<RoutedConnection> RouteConnections(
    const Topology& topology, std::span<const Connection> connections,
    int kappa, const ModulationTable& modulation) {
  std::vector<RoutedConnection> out;
  for (const auto& c : connections) {
    RoutedConnection rc;
    rc.connection = c;
    rc.candidates = KShortestPaths(topology, topology.node(c.source),
                                   topology.node(c.destination), kappa);
    if (!rc.candidates.empty()) {
      // Worst case: modulation fitted to the longest candidate.
      for (const auto& p : rc.candidates) {
        rc.longest_km = std::max(rc.longest_km, p.length_km);
      }
      const auto choice = SelectModulation(rc.longest_km, modulation);
      rc.bits_per_symbol = choice.bits_per_symbol;
      rc.out_of_reach = choice.out_of_reach;
    }
    out.push_back(std::move(rc));
  }
  return out;
}

SlotMatrix SlotsMatrix(const PredictionMatrix& prediction,
                       std::span<const RoutedConnection> connections,
                       double baud_gbaud, int guard_slots) {
  SlotMatrix out;
  out.reserve(connections.size());
  for (const auto& rc : connections) {
    auto it = prediction.rows.find(rc.connection.id);
    if (it == prediction.rows.end()) {
      throw CoverageError("no prediction row for connection " +
                          std::to_string(rc.connection.id));
    }
    std::vector<int> row;
    row.reserve(it->second.size());
    for (double gbps : it->second) {
      row.push_back(rc.candidates.empty()
                        ? 0
                        : RequiredSlots(gbps, rc.bits_per_symbol, baud_gbaud,
                                        guard_slots));
    }
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

std::size_t Steps(const SlotMatrix& slots) {
  if (slots.empty()) return 0;
  const std::size_t u = slots.front().size();
  for (const auto& row : slots) {
    if (row.size() != u) {
      throw std::invalid_argument("slot matrix rows differ in length");
    }
  }
  if (u == 0) throw std::invalid_argument("slot matrix needs u >= 1");
  return u;
}

}  // namespace

PlanDecision PlanMmd(const SlotMatrix& slots, std::size_t epoch) {
  Steps(slots);
  PlanDecision d;
  d.epoch = epoch;
  d.scheme = Scheme::kMmd;
  for (const auto& row : slots) {
    d.target_width.push_back(*std::max_element(row.begin(), row.end()));
  }
  return d;
}

PlanDecision PlanMad(const SlotMatrix& slots, std::size_t epoch) {
  const std::size_t u = Steps(slots);
  PlanDecision d;
  d.epoch = epoch;
  d.scheme = Scheme::kMad;
  if (slots.empty()) return d;
  d.aggregate.assign(u, 0);
  for (const auto& row : slots) {
    for (std::size_t i = 0; i < u; ++i) d.aggregate[i] += row[i];
  }
  // max_element keeps the earliest interval on ties.
  const auto best = static_cast<std::size_t>(
      std::max_element(d.aggregate.begin(), d.aggregate.end()) -
      d.aggregate.begin());
  d.mad_interval = static_cast<int>(best + 1);
  for (const auto& row : slots) d.target_width.push_back(row[best]);
  return d;
}

PlanDecision PlanSsd(const SlotMatrix& slots, std::size_t epoch) {
  Steps(slots);
  PlanDecision d;
  d.epoch = epoch;
  d.scheme = Scheme::kSsd;
  for (const auto& row : slots) d.target_width.push_back(row.front());
  return d;
}

PlanDecision Plan(Scheme scheme, const SlotMatrix& slots, std::size_t epoch) {
  switch (scheme) {
    case Scheme::kMmd: return PlanMmd(slots, epoch);
    case Scheme::kMad: return PlanMad(slots, epoch);
    case Scheme::kSsd: return PlanSsd(slots, epoch);
  }
  throw std::invalid_argument("unknown scheme");
}

std::string_view EventKindName(EventKind kind) {
  switch (kind) {
    case EventKind::kPlace: return "place";
    case EventKind::kReduce: return "reduce";
    case EventKind::kExpand: return "expand";
    case EventKind::kReallocate: return "reallocate";
    case EventKind::kReallocateSamePlace: return "reallocate-same";
    case EventKind::kBlocked: return "blocked";
  }
  return "?";
}

namespace {

AdjustmentEvent Grow(SpectrumGrid& grid, Lightpath& lp,
                     const RoutedConnection& rc, int target,
                     std::size_t epoch, int fluctuation) {
  AdjustmentEvent ev{epoch, fluctuation, lp.id, EventKind::kPlace,
                     lp.start,  lp.width,    0,     0};
  if (lp.width == 0) {
    ev.kind = Place(grid, lp, rc.candidates, target) ? EventKind::kPlace
                                                     : EventKind::kBlocked;
  } else if (Expand(grid, lp, target)) {
    ev.kind = EventKind::kExpand;
  } else {
    switch (Reallocate(grid, lp, rc.candidates, target)) {
      case ReallocationOutcome::kMoved:
        ev.kind = EventKind::kReallocate;
        break;
      case ReallocationOutcome::kSamePlace:
        ev.kind = EventKind::kReallocateSamePlace;
        break;
      case ReallocationOutcome::kBlocked:
        ev.kind = EventKind::kBlocked;
        break;
    }
  }
  ev.new_start = lp.start;
  ev.new_width = lp.width;
  return ev;
}

}  // namespace

std::vector<AdjustmentEvent> ApplyPlan(
    SpectrumGrid& grid, std::vector<Lightpath>& lightpaths,
    std::span<const RoutedConnection> connections,
    const PlanDecision& decision) {
  if (decision.target_width.size() != connections.size() ||
      lightpaths.size() != connections.size()) {
    throw std::invalid_argument("plan, lightpaths and connections differ in size");
  }
  std::vector<AdjustmentEvent> log;
  for (std::size_t c = 0; c < connections.size(); ++c) {
    const RoutedConnection& rc = connections[c];
    Lightpath& lp = lightpaths[c];
    const int target = decision.target_width[c];
    if (rc.candidates.empty() || target == lp.width) continue;
    if (target < lp.width) {
      AdjustmentEvent ev{decision.epoch, -1, lp.id, EventKind::kReduce,
                         lp.start,       lp.width, lp.start, target};
      Reduce(grid, lp, target);
      log.push_back(ev);
    } else {
      log.push_back(Grow(grid, lp, rc, target, decision.epoch, -1));
    }
  }
  return log;
}

std::vector<std::string> Scenario::sources() const {
  std::vector<std::string> out;
  for (const auto& rc : connections) out.push_back(rc.connection.source);
  return out;
}

Scenario BuildScenario(Topology topology, const TraceSet& traces,
                       ModulationTable modulation,
                       const PlanningParams& params) {
  params.Validate();
  if (traces.empty()) throw ConfigError("no traffic traces");
  const std::size_t needed = SamplesForPatterns(params.patterns, params.shape);

  TraceSet window;
  std::vector<std::string> sources;
  for (const auto& [id, trace] : traces) {
    if (!topology.FindNode(id)) {
      throw ConfigError("trace source " + id + " is not a topology node");
    }
    ValidateTrace(trace);
    if (trace.size() < needed) {
      throw SizeError("trace " + id + " has " + std::to_string(trace.size()) +
                      " samples; " + std::to_string(params.patterns) +
                      " windows need " + std::to_string(needed));
    }
    window.emplace(id, Slice(trace, 0, needed));
    sources.push_back(id);
  }

  const auto connections = DrawConnections(sources, topology, params.seed);
  auto routed =
      RouteConnections(topology, connections, params.kappa, modulation);

  const auto n_train = static_cast<std::size_t>(std::floor(
      static_cast<double>(params.patterns) * params.train_fraction));
  if (n_train >= params.patterns) {
    throw ConfigError("train fraction leaves no test windows");
  }
  std::vector<std::size_t> epochs;
  const auto r = static_cast<std::size_t>(params.shape.past);
  for (std::size_t i = n_train; i < params.patterns; ++i) epochs.push_back(r + i);

  return Scenario{std::move(topology), std::move(window), std::move(modulation),
                  params, std::move(routed), std::move(epochs)};
}

int ReplanCadence(Scheme scheme, const PlanningParams& params) {
  if (scheme == Scheme::kSsd) return 1;
  return params.replan_every.value_or(params.shape.horizon);
}

SimulationResult Simulate(const Scenario& scenario,
                          const PredictorGateway& predictor, Scheme scheme,
                          const SimulationOptions& options) {
  const PlanningParams& params = scenario.params;
  if (predictor.horizon() != params.shape.horizon) {
    throw ConfigError("predictor horizon differs from u");
  }
  const int cadence = ReplanCadence(scheme, params);
  const auto k = static_cast<std::size_t>(params.shape.fluctuations);
  const auto& conns = scenario.connections;

  std::vector<Connection> plain;
  for (const auto& rc : conns) plain.push_back(rc.connection);

  std::vector<std::size_t> plan_epochs;
  for (std::size_t s = 0; s < scenario.test_epochs.size(); ++s) {
    if (s % static_cast<std::size_t>(cadence) == 0) {
      plan_epochs.push_back(scenario.test_epochs[s]);
    }
  }
  const auto sources = scenario.sources();
  predictor.CheckCoverage(plan_epochs, sources);
  const std::size_t intervals = IntervalCount(
      scenario.traces.begin()->second.size(), params.shape);
  if (!scenario.test_epochs.empty() &&
      scenario.test_epochs.back() + 1 >= intervals) {
    throw ConfigError("test window runs past the end of the traces");
  }

  SimulationResult result;
  Metrics& m = result.metrics;
  m.scheme = scheme;
  m.connections = conns.size();
  m.intervals = scenario.test_epochs.size();
  m.replan_every = cadence;
  m.seed = params.seed;
  m.predictor = predictor.name();
  m.scale = params.scale;

  SpectrumGrid grid(scenario.topology.link_count(), params.slots);
  std::vector<Lightpath> lps;
  long setup_blocked = 0;
  std::vector<const TrafficTrace*> traces;
  for (const auto& rc : conns) {
    Lightpath lp;
    lp.id = rc.connection.id;
    lp.bits_per_symbol = rc.bits_per_symbol;
    if (rc.candidates.empty()) {
      ++setup_blocked;
    } else {
      lp.path = rc.candidates.front();
    }
    lps.push_back(std::move(lp));
    traces.push_back(&scenario.traces.at(rc.connection.source));
  }

  auto record = [&](const AdjustmentEvent& ev) {
    if (ev.fluctuation < 0) {
      m.plan_reallocations += ev.kind == EventKind::kReallocate;
    } else {
      m.fluctuation_expansions += ev.kind == EventKind::kExpand;
      m.fluctuation_reallocations += ev.kind == EventKind::kReallocate;
    }
    m.block_changes += ev.kind != EventKind::kPlace &&
                       (ev.old_start != ev.new_start ||
                        ev.old_width != ev.new_width);
    if (options.keep_log) result.log.push_back(ev);
    if (options.audit) {
      try {
        AuditSpectrum(grid, lps);
      } catch (const InvariantViolation& e) {
        throw InvariantViolation(std::string(e.what()) + "\n" +
                                 grid.Raster(scenario.topology));
      }
    }
  };

  double unutilized = 0.0;
  std::size_t samples = 0;
  for (std::size_t s = 0; s < scenario.test_epochs.size(); ++s) {
    const std::size_t epoch = scenario.test_epochs[s];
    if (s % static_cast<std::size_t>(cadence) == 0) {
      const auto slots = SlotsMatrix(predictor.Predict(epoch, plain), conns,
                                     params.baud_gbaud, params.guard_slots);
      auto decision = Plan(scheme, slots, epoch);
      for (const auto& ev : ApplyPlan(grid, lps, conns, decision)) record(ev);
      result.plans.push_back(std::move(decision));
    }
    // True fluctuations of interval epoch + 1.
    const std::size_t base = (epoch + 1) * k;
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t c = 0; c < conns.size(); ++c) {
        if (conns[c].candidates.empty()) continue;
        Lightpath& lp = lps[c];
        const double gbps = traces[c]->samples[base + j] * params.scale;
        const int required = RequiredSlots(gbps, lp.bits_per_symbol,
                                           params.baud_gbaud,
                                           params.guard_slots);
        if (required > lp.width) {
          record(Grow(grid, lp, conns[c], required, epoch,
                      static_cast<int>(j)));
        }
        unutilized += std::max(0, lp.width - required);
        ++samples;
      }
    }
  }

  for (const auto& lp : lps) {
    m.disruptions_total += lp.disruptions;
    m.blocked_connections += lp.blocked_events;
  }
  m.blocked_connections += setup_blocked;
  m.fluctuation_samples = samples;
  m.disruptions_avg =
      conns.empty() ? 0.0
                    : static_cast<double>(m.disruptions_total) /
                          static_cast<double>(conns.size());
  m.unutilized_fs_avg =
      samples == 0 ? 0.0 : unutilized / static_cast<double>(samples);
  AuditSpectrum(grid, lps);
  result.final_lightpaths = std::move(lps);
  return result;
}

}  // namespace eonplan
