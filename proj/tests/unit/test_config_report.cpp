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
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "eonplan/config.hpp"
#include "eonplan/error.hpp"
#include "eonplan/report.hpp"

namespace eonplan {
namespace {

TEST(Config, DefaultsArePaperValues) {
  const RunConfig c;
  const PlanningParams p = c.ToPlanningParams();
  EXPECT_EQ(p.shape.past, 3);
  EXPECT_EQ(p.shape.fluctuations, 6);
  EXPECT_EQ(p.shape.horizon, 4);
  EXPECT_EQ(p.slots, 320);
  EXPECT_EQ(p.baud_gbaud, 10.5);
  EXPECT_EQ(p.kappa, 3);
  EXPECT_EQ(p.scale, 50.0);
  EXPECT_EQ(p.guard_slots, 0);
  EXPECT_FALSE(p.replan_every);
}

TEST(Config, FileThenOverride) {
  RunConfig c;
  std::istringstream in(
      "# study\n"
      "u = 2\n"
      "scale=25   # halved\n"
      "\n"
      "predictor = file:preds.csv\n"
      "audit = yes\n");
  ApplyConfigFile(in, c);
  EXPECT_EQ(c.u, 2);
  EXPECT_EQ(c.scale, 25.0);
  EXPECT_EQ(c.predictor, "file:preds.csv");
  EXPECT_TRUE(c.audit);
  c.Set("u", "4");
  EXPECT_EQ(c.u, 4);
}

TEST(Config, Errors) {
  RunConfig c;
  EXPECT_THROW(c.Set("colour", "red"), ConfigError);
  EXPECT_THROW(c.Set("u", "four"), ConfigError);
  EXPECT_THROW(c.Set("audit", "maybe"), ConfigError);
  EXPECT_THROW(c.Set("seed", "-1"), ConfigError);
  std::istringstream bad("u 4\n");
  try {
    ApplyConfigFile(bad, c, "study.cfg");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("study.cfg line 1"),
              std::string::npos);
  }
  RunConfig zero;
  zero.slots = 0;
  EXPECT_THROW(zero.ToPlanningParams(), ConfigError);
  RunConfig neg;
  neg.replan_every = -2;
  EXPECT_THROW(neg.ToPlanningParams(), ConfigError);
}

TEST(Config, KeyValuesCoverEveryKey) {
  RunConfig c;
  const auto pairs = c.ToKeyValues();
  const auto keys = ConfigKeys();
  ASSERT_EQ(pairs.size(), keys.size());
  RunConfig copy;
  copy.seed = 99;
  copy.baud = 12.5;
  for (const auto& [k, v] : pairs) copy.Set(k, v);
  EXPECT_EQ(copy.ToKeyValues(), pairs);
}

std::vector<Metrics> SampleMetrics() {
  Metrics a;
  a.scheme = Scheme::kMmd;
  a.disruptions_total = 7;
  a.disruptions_avg = 7.0 / 12.0;
  a.unutilized_fs_avg = 2.25;
  a.seed = 3;
  a.predictor = "oracle";
  Metrics b = a;
  b.scheme = Scheme::kSsd;
  b.blocked_connections = 1;
  b.disruptions_total = 12;
  b.disruptions_avg = 1.0;
  b.unutilized_fs_avg = 1.5;
  return {a, b};
}

class ReportTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("eonplan_report_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(ReportTest, CsvAndJsonReadBackAlike) {
  const auto metrics = SampleMetrics();
  const ConfigPairs config = RunConfig{}.ToKeyValues();
  {
    std::ofstream out(dir_ / "m.csv");
    WriteMetricsCsv(out, metrics, config);
    std::ofstream js(dir_ / "m.json");
    WriteMetricsJson(js, metrics, config);
  }
  std::ifstream in(dir_ / "m.csv");
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first.front(), '#');
  const auto csv = ReadMetricsFile(dir_ / "m.csv");
  const auto json = ReadMetricsFile(dir_ / "m.json");
  ASSERT_EQ(csv.size(), 2u);
  ASSERT_EQ(json.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(csv[i].scheme, json[i].scheme);
    EXPECT_EQ(csv[i].blocked, json[i].blocked);
    EXPECT_EQ(csv[i].disruptions_total, json[i].disruptions_total);
    EXPECT_EQ(csv[i].disruptions_avg, json[i].disruptions_avg);
    EXPECT_EQ(csv[i].unutilized_avg, json[i].unutilized_avg);
    EXPECT_EQ(csv[i].predictor, "oracle");
  }
  EXPECT_EQ(csv[0].scheme, "mmd");
  EXPECT_EQ(csv[1].blocked, 1);
}

TEST_F(ReportTest, CsvHeader) {
  std::ostringstream out;
  WriteMetricsCsv(out, SampleMetrics(), {{"seed", "3"}});
  EXPECT_EQ(out.str().substr(0, 8), "# seed=3");
  EXPECT_NE(out.str().find("\nscheme,blocked,disruptions_total,disruptions_avg,"
                           "unutilized_avg,seed,predictor\n"),
            std::string::npos);
}

TEST_F(ReportTest, TableShape) {
  const std::string table = FormatMetricsTable(SampleMetrics());
  EXPECT_NE(table.find("MMD-SA"), std::string::npos);
  EXPECT_NE(table.find("SSD-SA"), std::string::npos);
  EXPECT_NE(table.find("Blocked Connections"), std::string::npos);
  EXPECT_NE(table.find("0.58"), std::string::npos);
  EXPECT_NE(table.find("2.25"), std::string::npos);
}

TEST_F(ReportTest, Comparison) {
  std::vector<MetricsRow> a{{"mmd", 0, 10, 1.0, 2.0, 1, "oracle"}};
  std::vector<MetricsRow> b{{"mmd", 0, 5, 0.5, 3.0, 1, "file"}};
  const std::string text = FormatComparison(a, b);
  EXPECT_NE(text.find("-50.0%"), std::string::npos) << text;
  EXPECT_NE(text.find("(50.0%)"), std::string::npos) << text;
  std::vector<MetricsRow> c{{"ssd", 0, 5, 0.5, 3.0, 1, "file"}};
  EXPECT_NE(FormatComparison(a, c).find("no scheme in common"),
            std::string::npos);
}

TEST_F(ReportTest, BadFiles) {
  EXPECT_THROW(ReadMetricsFile(dir_ / "absent.csv"), ConfigError);
  std::ofstream(dir_ / "x.csv") << "a,b\n1,2\n";
  EXPECT_THROW(ReadMetricsFile(dir_ / "x.csv"), ParseError);
  std::ofstream(dir_ / "x.json") << "{\"results\": [{}]}";
  EXPECT_THROW(ReadMetricsFile(dir_ / "x.json"), ParseError);
}

TEST(AdjustmentLog, Columns) {
  std::vector<AdjustmentEvent> log{
      {650, 2, 4, EventKind::kReallocate, 0, 5, 9, 7}};
  std::ostringstream out;
  WriteAdjustmentLogCsv(out, log, {});
  EXPECT_EQ(out.str(),
            "epoch,fluctuation,connection,event,old_start,old_width,new_start,"
            "new_width\n650,2,4,reallocate,0,5,9,7\n");
}

}  // namespace
}  // namespace eonplan
