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

// eonplan: multi-period spectrum planning simulator for elastic optical
// networks. Exit codes: 0 success, 2 configuration/input error, 3 invariant
// violation.

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eonplan/config.hpp"
#include "eonplan/csv.hpp"
#include "eonplan/error.hpp"
#include "eonplan/modulation.hpp"
#include "eonplan/planner.hpp"
#include "eonplan/predictor.hpp"
#include "eonplan/report.hpp"
#include "eonplan/routing.hpp"
#include "eonplan/synthetic.hpp"
#include "eonplan/topology.hpp"
#include "eonplan/trace.hpp"
#include "eonplan/windowing.hpp"

namespace fs = std::filesystem;
using namespace eonplan;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInvariant = 3;

// Thrown after an audit failure once the dump has been written.
struct AuditFailure {
  std::string message;
};

std::ofstream OpenOutput(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

// ---------------------------------------------------------------- synth

struct SynthArgs {
  std::string out;
  std::string format = "csv";
  std::string topology;
  double days = 17.0;
  std::uint64_t seed = 2004;
  double mean_pair_gbps = 0.14;
};

void WriteSndlibMatrices(const fs::path& dir, const DemandSeries& d) {
  fs::create_directories(dir);
  const auto step = static_cast<std::int64_t>(d.base_period_min * 60.0);
  for (std::size_t t = 0; t < d.samples; ++t) {
    const std::int64_t ts = d.start_time_s + step * static_cast<std::int64_t>(t);
    const std::int64_t days = ts / 86400;
    // Civil date from days since epoch.
    const std::int64_t z = days + 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const auto doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned day = doy - (153 * mp + 2) / 5 + 1;
    const unsigned month = mp < 10 ? mp + 3 : mp - 9;
    const auto year = static_cast<long>(yoe) + era * 400 + (month <= 2);
    const auto secs = ts % 86400;
    char stamp[32];
    std::snprintf(stamp, sizeof(stamp), "%04ld%02u%02u-%02ld%02ld", year, month,
                  day, static_cast<long>(secs / 3600),
                  static_cast<long>(secs % 3600 / 60));
    auto out = OpenOutput(dir / ("demandMatrix-" + std::string(stamp) + ".xml"));
    out << "<?xml version=\"1.0\" encoding=\"ISO-8859-1\"?>\n"
        << "<network xmlns=\"http://sndlib.zib.de/network\" version=\"1.0\">\n"
        << " <meta>\n  <granularity>5min</granularity>\n  <time>" << stamp
        << "</time>\n  <unit>GBITPERSEC</unit>\n </meta>\n <demands>\n";
    const std::size_t n = d.nodes.size();
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t e = 0; e < n; ++e) {
        if (s == e) continue;
        out << "  <demand id=\"" << d.nodes[s] << '_' << d.nodes[e]
            << "\">\n   <source>" << d.nodes[s] << "</source>\n   <target>"
            << d.nodes[e] << "</target>\n   <demandValue>"
            << csv::FormatDouble(d.at(t, s, e)) << "</demandValue>\n  </demand>\n";
      }
    }
    out << " </demands>\n</network>\n";
  }
}

int RunSynth(const SynthArgs& args) {
  SyntheticTraceOptions opts;
  opts.nodes = args.topology.empty() ? AbileneNodeIds()
                                     : LoadTopology(args.topology).node_ids();
  if (!(args.days > 0.0)) throw ConfigError("--days must be positive");
  opts.samples = static_cast<std::size_t>(args.days * 1440.0 / opts.base_period_min);
  opts.seed = args.seed;
  opts.mean_pair_gbps = args.mean_pair_gbps;
  const auto demands = GenerateDemands(opts);
  if (ParseTraceFormat(args.format) == TraceFormat::kSndlibXml) {
    WriteSndlibMatrices(args.out, demands);
  } else {
    auto out = OpenOutput(args.out);
    WriteDemandsCsv(out, demands);
  }
  std::cout << "wrote " << demands.samples << " matrices of "
            << demands.nodes.size() << " nodes to " << args.out << '\n';
  return kExitOk;
}

// --------------------------------------------------------------- ingest

struct IngestArgs {
  std::string trace;
  std::string format = "csv";
  std::string out = "datasets";
  int r = 3;
  int k = 6;
  int u = 4;
  std::size_t patterns = 800;
  double train_fraction = 0.8;
  bool raw = false;
};

int RunIngest(const IngestArgs& args) {
  const WindowShape shape{args.r, args.k, args.u};
  shape.Validate();
  const auto traces = ParseTraceFile(args.trace, ParseTraceFormat(args.format));
  const fs::path dir(args.out);
  fs::create_directories(dir);

  nlohmann::ordered_json manifest;
  manifest["trace"] = args.trace;
  manifest["r"] = args.r;
  manifest["k"] = args.k;
  manifest["u"] = args.u;
  manifest["patterns"] = args.patterns;
  manifest["train_fraction"] = args.train_fraction;
  manifest["normalized"] = !args.raw;
  manifest["sources"] = nlohmann::ordered_json::object();

  const std::size_t needed = SamplesForPatterns(args.patterns, shape);
  for (const auto& [id, trace] : traces) {
    if (trace.size() < needed) {
      throw SizeError("trace " + id + " has " + std::to_string(trace.size()) +
                      " samples; " + std::to_string(args.patterns) +
                      " patterns need " + std::to_string(needed));
    }
    const auto dataset = BuildDataset(Slice(trace, 0, needed), shape);
    const auto split = SplitDataset(dataset, args.train_fraction);
    const auto norm = Normalizer::Fit(split.train);
    std::vector<WindowSample> rows;
    rows.reserve(dataset.size());
    for (const auto& s : dataset) rows.push_back(args.raw ? s : norm.Apply(s));
    const std::string file = id + ".csv";
    auto out = OpenOutput(dir / file);
    WriteDatasetCsv(out, rows, shape);

    manifest["sources"][id] = {
        {"file", file},
        {"rows", dataset.size()},
        {"train_rows", split.train.size()},
        {"test_rows", split.test.size()},
        {"train_t_index", {split.train.front().t_index, split.train.back().t_index}},
        {"test_t_index",
         split.test.empty()
             ? nlohmann::ordered_json::array()
             : nlohmann::ordered_json{split.test.front().t_index,
                                      split.test.back().t_index}},
        {"normalizer", {{"min", norm.min()}, {"max", norm.max()}}},
    };
  }
  auto out = OpenOutput(dir / "manifest.json");
  out << manifest.dump(2) << '\n';
  std::cout << "wrote " << traces.size() << " datasets of " << args.patterns
            << " windows to " << dir.string() << '\n';
  return kExitOk;
}

// ------------------------------------------------------------- simulate

struct Loaded {
  std::shared_ptr<const Scenario> scenario;
  std::shared_ptr<const TraceSet> traces;
};

Loaded LoadScenario(const RunConfig& config) {
  const PlanningParams params = config.ToPlanningParams();
  if (config.trace.empty()) throw ConfigError("no trace given (--trace)");
  auto topology = LoadTopology(config.topology);
  const auto traces =
      ParseTraceFile(config.trace, ParseTraceFormat(config.trace_format));
  auto modulation = config.modulation.empty()
                        ? ModulationTable::Default()
                        : LoadModulationTable(config.modulation);
  Loaded out;
  out.scenario = std::make_shared<const Scenario>(
      BuildScenario(std::move(topology), traces, std::move(modulation), params));
  out.traces = std::make_shared<const TraceSet>(out.scenario->traces);
  return out;
}

PredictorGateway MakeGateway(const RunConfig& config, const Loaded& loaded) {
  const auto spec = PredictorSpec::Parse(config.predictor);
  const auto& shape = loaded.scenario->params.shape;
  switch (spec.kind) {
    case PredictorKind::kOracle:
      return PredictorGateway::Oracle(loaded.traces, shape, config.scale);
    case PredictorKind::kPersistence:
      return PredictorGateway::Persistence(loaded.traces, shape, config.scale);
    case PredictorKind::kFile:
      return PredictorGateway::FromTable(PredictionTable::Load(spec.file), shape,
                                         config.scale);
  }
  throw ConfigError("unknown predictor");
}

int RunSimulate(const RunConfig& config) {
  const auto schemes = ParseSchemeList(config.schemes);
  const Loaded loaded = LoadScenario(config);
  const PredictorGateway gateway = MakeGateway(config, loaded);
  const auto pairs = config.ToKeyValues();

  SimulationOptions options;
  options.audit = config.audit;
  options.keep_log = config.log_adjustments;

  std::vector<std::future<SimulationResult>> runs;
  for (Scheme s : schemes) {
    runs.push_back(std::async(std::launch::async, [&, s] {
      return Simulate(*loaded.scenario, gateway, s, options);
    }));
  }
  std::vector<SimulationResult> results;
  std::string violation;
  for (auto& f : runs) {
    try {
      results.push_back(f.get());
    } catch (const InvariantViolation& e) {
      violation = e.what();
    }
  }
  const fs::path dir(config.out);
  if (!violation.empty()) {
    auto dump = OpenOutput(dir / "audit_dump.txt");
    dump << violation << '\n';
    throw AuditFailure{violation};
  }

  std::vector<Metrics> metrics;
  for (const auto& r : results) metrics.push_back(r.metrics);
  {
    auto out = OpenOutput(dir / "metrics.csv");
    WriteMetricsCsv(out, metrics, pairs);
  }
  {
    auto out = OpenOutput(dir / "metrics.json");
    WriteMetricsJson(out, metrics, pairs);
  }
  const std::string table = FormatMetricsTable(metrics);
  {
    auto out = OpenOutput(dir / "metrics.txt");
    for (const auto& [k, v] : pairs) out << "# " << k << '=' << v << '\n';
    out << table;
  }
  if (config.log_adjustments) {
    for (const auto& r : results) {
      auto out = OpenOutput(dir / ("adjustments_" +
                                   std::string(SchemeToken(r.metrics.scheme)) +
                                   ".csv"));
      WriteAdjustmentLogCsv(out, r.log, pairs);
    }
  }
  std::cout << table;
  return kExitOk;
}

int RunPredict(const RunConfig& config, const std::string& output) {
  const Loaded loaded = LoadScenario(config);
  const PredictorGateway gateway = MakeGateway(config, loaded);
  if (gateway.kind() == PredictorKind::kFile) {
    throw ConfigError("predict needs the oracle or persistence predictor");
  }
  auto out = OpenOutput(output);
  ExportPredictions(out, gateway, loaded.scenario->test_epochs,
                    loaded.scenario->sources());
  std::cout << "wrote " << loaded.scenario->test_epochs.size() << " epochs x "
            << loaded.scenario->sources().size() << " sources x u="
            << config.u << " predictions to " << output << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- paths

struct PathsArgs {
  std::string topology = "data/abilene.xml";
  std::string modulation;
  int kappa = 3;
  std::string src;
  std::string dst;
};

int RunPaths(const PathsArgs& args) {
  const auto topology = LoadTopology(args.topology);
  const auto table = args.modulation.empty() ? ModulationTable::Default()
                                             : LoadModulationTable(args.modulation);
  std::vector<NodeIndex> sources, targets;
  for (NodeIndex n = 0; n < topology.node_count(); ++n) {
    if (args.src.empty() || topology.node_id(n) == args.src) sources.push_back(n);
    if (args.dst.empty() || topology.node_id(n) == args.dst) targets.push_back(n);
  }
  if (!args.src.empty()) topology.node(args.src);
  if (!args.dst.empty()) topology.node(args.dst);
  for (NodeIndex s : sources) {
    for (NodeIndex d : targets) {
      if (s == d) continue;
      const auto paths = KShortestPaths(topology, s, d, args.kappa);
      double longest = 0.0;
      for (const auto& p : paths) longest = std::max(longest, p.length_km);
      std::cout << topology.node_id(s) << " -> " << topology.node_id(d);
      if (paths.empty()) {
        std::cout << ": unreachable\n";
        continue;
      }
      const auto choice = SelectModulation(longest, table);
      std::cout << ": " << table.Find(choice.bits_per_symbol).name
                << " (longest " << std::lround(longest) << " km"
                << (choice.out_of_reach ? ", OUT OF REACH" : "") << ")\n";
      for (std::size_t i = 0; i < paths.size(); ++i) {
        std::cout << "  " << i + 1 << ". " << FormatPath(topology, paths[i])
                  << "  " << csv::FormatDouble(std::round(paths[i].length_km * 10) / 10)
                  << " km\n";
      }
    }
  }
  return kExitOk;
}

// -------------------------------------------------------------- compare

int RunCompare(const std::string& a, const std::string& b) {
  const auto base = ReadMetricsFile(a);
  const auto cand = ReadMetricsFile(b);
  std::cout << "baseline:  " << a << "\ncandidate: " << b << "\n"
            << FormatComparison(base, cand);
  return kExitOk;
}

std::string OptionName(const std::string& key) {
  std::string name = key;
  for (auto& c : name) {
    if (c == '_') c = '-';
  }
  return "--" + name;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-period spectrum planning simulator for elastic optical networks"};
  app.require_subcommand(1);

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic backbone traffic trace");
  synth_cmd->add_option("--out", synth.out, "Output csv file (or directory for sndlib-xml)")->required();
  synth_cmd->add_option("--format", synth.format, "csv or sndlib-xml");
  synth_cmd->add_option("--topology", synth.topology, "Take node ids from this topology (default: Abilene)");
  synth_cmd->add_option("--days", synth.days, "Length in days");
  synth_cmd->add_option("--seed", synth.seed, "Generator seed");
  synth_cmd->add_option("--mean-pair-gbps", synth.mean_pair_gbps, "Mean demand per node pair");

  IngestArgs ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Export per-source sliding-window datasets");
  ingest_cmd->add_option("--trace", ingest.trace, "Traffic trace (csv file or SNDlib xml file/directory)")->required();
  ingest_cmd->add_option("--format", ingest.format, "csv or sndlib-xml");
  ingest_cmd->add_option("--out", ingest.out, "Output directory");
  ingest_cmd->add_option("--r", ingest.r, "Past planning intervals");
  ingest_cmd->add_option("--k", ingest.k, "Fluctuations per interval");
  ingest_cmd->add_option("--u", ingest.u, "Future planning intervals");
  ingest_cmd->add_option("--patterns", ingest.patterns, "Windows per source");
  ingest_cmd->add_option("--train-fraction", ingest.train_fraction, "Chronological training share");
  ingest_cmd->add_flag("--raw", ingest.raw, "Write Gbps instead of normalized values");

  // simulate and predict share the RunConfig surface.
  std::string config_file;
  std::map<std::string, std::string> overrides;
  bool audit_flag = false;
  bool log_flag = false;
  std::string predict_out;
  auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_file, "key = value config file");
    for (const auto& key : ConfigKeys()) {
      if (key == "audit" || key == "log_adjustments") continue;
      const std::string names =
          key == "schemes" ? "--schemes,--scheme" : OptionName(key);
      cmd->add_option(names, overrides[key]);
    }
    cmd->add_flag("--audit", audit_flag, "Audit spectrum invariants after every change");
    cmd->add_flag("--log-adjustments", log_flag, "Write the adjustment log csv");
  };
  auto* sim_cmd = app.add_subcommand("simulate", "Run provisioning schemes over the test window");
  add_run_options(sim_cmd);
  auto* predict_cmd = app.add_subcommand(
      "predict", "Write oracle/persistence predictions in interchange format");
  add_run_options(predict_cmd);
  predict_cmd->add_option("--output", predict_out, "Predictions csv")->required();

  std::string compare_a, compare_b;
  auto* compare_cmd = app.add_subcommand("compare", "Diff two metrics files");
  compare_cmd->add_option("baseline", compare_a)->required();
  compare_cmd->add_option("candidate", compare_b)->required();

  PathsArgs paths;
  auto* paths_cmd = app.add_subcommand("paths", "Print k-shortest paths and modulation per pair");
  paths_cmd->add_option("--topology", paths.topology);
  paths_cmd->add_option("--modulation", paths.modulation);
  paths_cmd->add_option("--kappa", paths.kappa);
  paths_cmd->add_option("--src", paths.src);
  paths_cmd->add_option("--dst", paths.dst);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  auto resolve = [&](CLI::App* cmd) {
    RunConfig config;
    if (!config_file.empty()) ApplyConfigFile(fs::path(config_file), config);
    for (const auto& key : ConfigKeys()) {
      if (key == "audit" || key == "log_adjustments") continue;
      if (cmd->count(OptionName(key)) > 0) config.Set(key, overrides[key]);
    }
    if (audit_flag) config.audit = true;
    if (log_flag) config.log_adjustments = true;
    return config;
  };

  try {
    if (*synth_cmd) return RunSynth(synth);
    if (*ingest_cmd) return RunIngest(ingest);
    if (*sim_cmd) return RunSimulate(resolve(sim_cmd));
    if (*predict_cmd) return RunPredict(resolve(predict_cmd), predict_out);
    if (*compare_cmd) return RunCompare(compare_a, compare_b);
    if (*paths_cmd) return RunPaths(paths);
  } catch (const AuditFailure& e) {
    std::cerr << "invariant violation:\n" << e.message << '\n';
    return kExitInvariant;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
