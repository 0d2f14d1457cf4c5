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


#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <sstream>

#include "eonplan/error.hpp"
#include "eonplan/planner.hpp"
#include "eonplan/predictor.hpp"
#include "fixtures.hpp"
#include "ridge.hpp"

namespace eonplan {
namespace {

std::shared_ptr<const TraceSet> OneTrace(std::vector<double> samples) {
  auto set = std::make_shared<TraceSet>();
  (*set)["A"] = TrafficTrace{"A", std::move(samples), 5.0, 0};
  return set;
}

PredictionTable ReadTable(const std::string& text) {
  std::istringstream in(text);
  return PredictionTable::Read(in);
}

TEST(PredictorSpec, ParseAndFormat) {
  EXPECT_EQ(PredictorSpec::Parse("oracle").kind, PredictorKind::kOracle);
  EXPECT_EQ(PredictorSpec::Parse("persistence").kind,
            PredictorKind::kPersistence);
  const auto file = PredictorSpec::Parse("file:/tmp/p.csv");
  EXPECT_EQ(file.kind, PredictorKind::kFile);
  EXPECT_EQ(file.file, "/tmp/p.csv");
  EXPECT_EQ(file.ToString(), "file:/tmp/p.csv");
  EXPECT_THROW(PredictorSpec::Parse("lstm"), ConfigError);
  EXPECT_THROW(PredictorSpec::Parse("file:"), ConfigError);
}

TEST(Oracle, NextIntervalMax) {
  // Interval 1 holds (2,7,5,1,3,4).
  const WindowShape shape{1, 6, 1};
  const auto gw = PredictorGateway::Oracle(
      OneTrace({0, 0, 0, 0, 0, 0, 2, 7, 5, 1, 3, 4}), shape, 1.0);
  EXPECT_EQ(gw.PredictSource("A", 0), (std::vector<double>{7}));
  EXPECT_THROW(gw.PredictSource("A", 1), HorizonError);
}

TEST(Persistence, RepeatsPresentMax) {
  const WindowShape shape{1, 2, 4};
  const auto gw =
      PredictorGateway::Persistence(OneTrace({1, 9, 3, 4}), shape, 1.0);
  EXPECT_EQ(gw.PredictSource("A", 0), (std::vector<double>{9, 9, 9, 9}));
  EXPECT_EQ(gw.PredictSource("A", 1), (std::vector<double>{4, 4, 4, 4}));
}

TEST(FileBackend, ValueReadBackVerbatimThenScaled) {
  const WindowShape shape;
  std::string text = "source_id,t_index,step,predicted_gbps\n";
  for (int step = 1; step <= 4; ++step) {
    text += "ATLAM5,642," + std::to_string(step) + "," +
            (step == 3 ? "41.7" : "1") + "\n";
  }
  const auto raw = PredictorGateway::FromTable(ReadTable(text), shape, 1.0);
  EXPECT_EQ(raw.PredictSource("ATLAM5", 642)[2], 41.7);
  const auto scaled = PredictorGateway::FromTable(ReadTable(text), shape, 50.0);
  const std::vector<Connection> conns{{0, "ATLAM5", "CHINng"}};
  const PredictionMatrix m = scaled.Predict(642, conns);
  EXPECT_EQ(m.epoch, 642u);
  EXPECT_EQ(m.rows.at(0)[2], 41.7 * 50.0);
}

TEST(FileBackend, MissingCellsAreCoverageErrors) {
  const WindowShape shape{3, 6, 2};
  const auto gw = PredictorGateway::FromTable(
      ReadTable("source_id,t_index,step,predicted_gbps\nA,5,1,1.0\n"), shape,
      1.0);
  EXPECT_THROW(gw.PredictSource("A", 5), CoverageError);
  const std::vector<std::size_t> epochs{5, 6};
  const std::vector<std::string> sources{"A"};
  try {
    gw.CheckCoverage(epochs, sources);
    FAIL() << "expected CoverageError";
  } catch (const CoverageError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("(A, 5, 2)"), std::string::npos) << what;
    EXPECT_NE(what.find("(A, 6, 1)"), std::string::npos) << what;
  }
}

TEST(PredictionTable, RejectsBadRows) {
  const std::string head = "source_id,t_index,step,predicted_gbps\n";
  EXPECT_THROW(ReadTable(head + "A,1,1,-0.5\n"), ValidationError);
  EXPECT_THROW(ReadTable(head + "A,1,1,nan\n"), ValidationError);
  EXPECT_THROW(ReadTable(head + "A,1,1,inf\n"), ValidationError);
  EXPECT_THROW(ReadTable(head + "A,1,1,1\nA,1,1,2\n"), ValidationError);
  EXPECT_THROW(ReadTable(head + "A,1,0,1\n"), ValidationError);
  EXPECT_THROW(ReadTable(head + "A,x,1,1\n"), ParseError);
  EXPECT_THROW(ReadTable("source,t,step,value\nA,1,1,1\n"), ParseError);
  EXPECT_THROW(ReadTable(""), ParseError);
}

TEST(PredictionTable, FixedHeaderAndLookup) {
  EXPECT_THROW(ReadTable("step,predicted_gbps,source_id,t_index\n2,3.5,A,7\n"),
               ParseError);
  const auto t = ReadTable("source_id,t_index,step,predicted_gbps\nA,7,2,3.5\n");
  ASSERT_NE(t.Find("A", 7, 2), nullptr);
  EXPECT_EQ(*t.Find("A", 7, 2), 3.5);
  EXPECT_EQ(t.Find("A", 7, 1), nullptr);
}

class AbileneGateway : public ::testing::Test {
 protected:
  AbileneGateway()
      : scenario_(BuildScenario(testing::AbileneTopology(),
                                testing::SyntheticAbileneTraces(),
                                ModulationTable::Default(), PlanningParams{})),
        traces_(std::make_shared<const TraceSet>(scenario_.traces)) {}

  Scenario scenario_;
  std::shared_ptr<const TraceSet> traces_;
};

TEST_F(AbileneGateway, OracleEqualsWindowTargets) {
  const WindowShape shape;
  const auto gw = PredictorGateway::Oracle(traces_, shape, 1.0);
  for (const auto& [id, trace] : *traces_) {
    for (const WindowSample& w : BuildDataset(trace, shape)) {
      ASSERT_EQ(gw.PredictSource(id, w.t_index), w.psi) << id << w.t_index;
    }
  }
}

TEST_F(AbileneGateway, InterchangeCoversTestWindow) {
  const WindowShape shape;
  const auto oracle = PredictorGateway::Oracle(traces_, shape, 50.0);
  const auto sources = scenario_.sources();
  std::stringstream buf;
  ExportPredictions(buf, oracle, scenario_.test_epochs, sources);
  const PredictionTable table = PredictionTable::Read(buf);
  EXPECT_EQ(scenario_.test_epochs.size(), 160u);
  EXPECT_EQ(table.size(), 160u * 4u * 12u);
  const auto file = PredictorGateway::FromTable(table, shape, 50.0);
  file.CheckCoverage(scenario_.test_epochs, sources);
  std::vector<Connection> conns;
  for (const auto& rc : scenario_.connections) conns.push_back(rc.connection);
  for (std::size_t e : scenario_.test_epochs) {
    ASSERT_EQ(file.Predict(e, conns), oracle.Predict(e, conns)) << e;
  }
}

TEST_F(AbileneGateway, BackendsArePure) {
  const WindowShape shape;
  std::vector<Connection> conns;
  for (const auto& rc : scenario_.connections) conns.push_back(rc.connection);
  for (const auto& gw : {PredictorGateway::Oracle(traces_, shape, 50.0),
                         PredictorGateway::Persistence(traces_, shape, 50.0)}) {
    const std::size_t e = scenario_.test_epochs.front();
    EXPECT_EQ(gw.Predict(e, conns), gw.Predict(e, conns));
  }
}

TEST_F(AbileneGateway, OracleHorizonPastTraceEnd) {
  const WindowShape shape;
  const auto gw = PredictorGateway::Oracle(traces_, shape, 1.0);
  const std::vector<std::string> sources = scenario_.sources();
  const std::vector<std::size_t> last{scenario_.test_epochs.back()};
  gw.CheckCoverage(last, sources);
  const std::vector<std::size_t> beyond{scenario_.test_epochs.back() + 1};
  EXPECT_THROW(gw.CheckCoverage(beyond, sources), HorizonError);
}

TEST_F(AbileneGateway, LinearStandInFillsTheInterchange) {
  const WindowShape shape;
  const PredictionTable table =
      testing::FitRidgePredictions(scenario_.traces, shape);
  EXPECT_EQ(table.size(), 800u * 4u * 12u);
  std::stringstream buf;
  table.Write(buf);
  const auto gw =
      PredictorGateway::FromTable(PredictionTable::Read(buf), shape, 1.0);
  gw.CheckCoverage(scenario_.test_epochs, scenario_.sources());
  double err = 0.0;
  std::size_t n = 0;
  const auto oracle = PredictorGateway::Oracle(traces_, shape, 1.0);
  for (const auto& id : scenario_.sources()) {
    for (std::size_t e : scenario_.test_epochs) {
      const auto got = gw.PredictSource(id, e);
      const auto want = oracle.PredictSource(id, e);
      for (std::size_t j = 0; j < got.size(); ++j) {
        EXPECT_GE(got[j], 0.0);
        err += (got[j] - want[j]) * (got[j] - want[j]) /
               (want[j] * want[j]);
        ++n;
      }
    }
  }
  // Relative RMS error against the true interval maxima.
  EXPECT_LT(std::sqrt(err / static_cast<double>(n)), 0.25);
}

}  // namespace
}  // namespace eonplan
