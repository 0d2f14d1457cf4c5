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
#include <numbers>
#include <random>
#include <sstream>

#include "eonplan/error.hpp"
#include "eonplan/modulation.hpp"
#include "eonplan/routing.hpp"
#include "eonplan/topology.hpp"
#include "fixtures.hpp"

namespace eonplan {
namespace {

Topology FromCsv(const std::string& text) {
  std::istringstream in(text);
  return ReadTopologyCsv(in);
}

std::vector<std::string> Names(const Topology& t, const Path& p) {
  std::vector<std::string> out;
  for (NodeIndex n : p.nodes) out.push_back(t.node_id(n));
  return out;
}

TEST(Topology, FibersBecomeTwoDirectedLinks) {
  const Topology t = FromCsv("node_a,node_b,length_km\nB,A,10\nB,C,20\n");
  EXPECT_EQ(t.node_count(), 3u);
  EXPECT_EQ(t.link_count(), 4u);
  EXPECT_EQ(t.node_ids(), (std::vector<std::string>{"A", "B", "C"}));
  const auto ab = t.FindLink(t.node("A"), t.node("B"));
  const auto ba = t.FindLink(t.node("B"), t.node("A"));
  ASSERT_TRUE(ab && ba);
  EXPECT_NE(*ab, *ba);
  EXPECT_EQ(t.link(*ab).length_km, 10.0);
  EXPECT_FALSE(t.FindLink(t.node("A"), t.node("C")));
  EXPECT_THROW(t.node("Z"), ConfigError);
}

TEST(Topology, Validation) {
  EXPECT_THROW(FromCsv("node_a,node_b,length_km\nA,A,1\n"), ValidationError);
  EXPECT_THROW(FromCsv("node_a,node_b,length_km\nA,B,0\n"), ValidationError);
  EXPECT_THROW(FromCsv("node_a,node_b,length_km\nA,B,1\nB,A,2\n"),
               ValidationError);
  EXPECT_THROW(FromCsv("node_a,node_b,length_km\n,B,1\n"), ValidationError);
  EXPECT_THROW(FromCsv("a,b\nA,B\n"), ParseError);
}

TEST(Topology, CsvRoundTrip) {
  const Topology t = testing::AbileneTopology();
  std::stringstream buf;
  WriteTopologyCsv(buf, t);
  const Topology back = ReadTopologyCsv(buf);
  ASSERT_EQ(back.link_count(), t.link_count());
  for (LinkIndex l = 0; l < t.link_count(); ++l) {
    EXPECT_EQ(back.link(l).from, t.link(l).from);
    EXPECT_EQ(back.link(l).to, t.link(l).to);
    EXPECT_NEAR(back.link(l).length_km, t.link(l).length_km, 1e-9);
  }
}

TEST(Topology, AbileneHasTwelveNodesAndThirtyDirectedLinks) {
  const Topology t = testing::AbileneTopology();
  EXPECT_EQ(t.node_count(), 12u);
  EXPECT_EQ(t.link_count(), 30u);
  for (const Link& l : t.links()) {
    EXPECT_GT(l.length_km, 100.0);
    EXPECT_LT(l.length_km, 2500.0);
  }
}

TEST(GreatCircle, KnownDistances) {
  const double quarter = std::numbers::pi / 2.0 * 6371.0;
  EXPECT_NEAR(GreatCircleKm(0, 0, 0, 90), quarter, 1e-6);
  EXPECT_NEAR(GreatCircleKm(0, 0, 90, 0), quarter, 1e-6);
  EXPECT_NEAR(GreatCircleKm(0, 0, 1, 0), 6371.0 * std::numbers::pi / 180.0,
              1e-6);
  EXPECT_EQ(GreatCircleKm(12, 34, 12, 34), 0.0);
}

TEST(Routing, LineGraphHasOnePath) {
  const Topology t = FromCsv("node_a,node_b,length_km\nA,B,1\nB,C,1\n");
  const auto paths = KShortestPaths(t, t.node("A"), t.node("C"), 3);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(Names(t, paths[0]), (std::vector<std::string>{"A", "B", "C"}));
}

TEST(Routing, SquareOrderedByLength) {
  const Topology t = FromCsv(
      "node_a,node_b,length_km\nA,B,1\nB,D,1\nA,C,2\nC,D,2\n");
  const auto paths = KShortestPaths(t, t.node("A"), t.node("D"), 3);
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(Names(t, paths[0]), (std::vector<std::string>{"A", "B", "D"}));
  EXPECT_EQ(paths[0].length_km, 2.0);
  EXPECT_EQ(Names(t, paths[1]), (std::vector<std::string>{"A", "C", "D"}));
  EXPECT_EQ(paths[1].length_km, 4.0);
}

TEST(Routing, TiesBrokenByNodeSequence) {
  const Topology t = FromCsv(
      "node_a,node_b,length_km\nA,C,1\nC,D,1\nA,B,1\nB,D,1\n");
  const auto paths = KShortestPaths(t, t.node("A"), t.node("D"), 2);
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(Names(t, paths[0]), (std::vector<std::string>{"A", "B", "D"}));
  EXPECT_EQ(Names(t, paths[1]), (std::vector<std::string>{"A", "C", "D"}));
}

TEST(Routing, DisconnectedAndInvalid) {
  const Topology t = FromCsv("node_a,node_b,length_km\nA,B,1\nC,D,1\n");
  EXPECT_TRUE(KShortestPaths(t, t.node("A"), t.node("D"), 3).empty());
  EXPECT_THROW(KShortestPaths(t, t.node("A"), t.node("A"), 3), ConfigError);
  EXPECT_THROW(KShortestPaths(t, t.node("A"), t.node("B"), 0), ConfigError);
}

TEST(Routing, MakePathRejectsGaps) {
  const Topology t = FromCsv("node_a,node_b,length_km\nA,B,1\nB,C,2\n");
  const Path p = MakePath(t, {t.node("C"), t.node("B"), t.node("A")});
  EXPECT_EQ(p.length_km, 3.0);
  EXPECT_EQ(p.links.size(), 2u);
  EXPECT_THROW(MakePath(t, {t.node("A"), t.node("C")}), ValidationError);
}

TEST(Routing, AbileneMatchesBruteForce) {
  const Topology t = testing::AbileneTopology();
  for (NodeIndex s = 0; s < t.node_count(); ++s) {
    for (NodeIndex d = 0; d < t.node_count(); ++d) {
      if (s == d) continue;
      const auto got = KShortestPaths(t, s, d, 3);
      const auto want = testing::BruteForceShortestPaths(t, s, d, 3);
      ASSERT_LE(got.size(), 3u);
      ASSERT_FALSE(got.empty());
      EXPECT_EQ(got, want) << t.node_id(s) << "->" << t.node_id(d);
      for (const Path& p : got) {
        std::vector<NodeIndex> sorted = p.nodes;
        std::sort(sorted.begin(), sorted.end());
        EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()),
                  sorted.end());
      }
    }
  }
}

TEST(Routing, RandomGraphsMatchBruteForce) {
  for (int g = 0; g < 60; ++g) {
    const Topology t = testing::RandomTopology(
        static_cast<std::uint64_t>(g), 3 + g % 6, 0.4);
    for (NodeIndex s = 0; s < t.node_count(); ++s) {
      for (NodeIndex d = 0; d < t.node_count(); ++d) {
        if (s == d) continue;
        EXPECT_EQ(KShortestPaths(t, s, d, 4),
                  testing::BruteForceShortestPaths(t, s, d, 4));
      }
    }
  }
}

TEST(Modulation, DefaultReachTable) {
  const auto table = ModulationTable::Default();
  EXPECT_EQ(SelectModulation(400, table).bits_per_symbol, 4);
  EXPECT_EQ(SelectModulation(500, table).bits_per_symbol, 4);
  EXPECT_EQ(SelectModulation(1000, table).bits_per_symbol, 3);
  EXPECT_EQ(SelectModulation(1500, table).bits_per_symbol, 2);
  EXPECT_EQ(SelectModulation(4000, table).bits_per_symbol, 1);
  const auto far = SelectModulation(5000, table);
  EXPECT_EQ(far.bits_per_symbol, 1);
  EXPECT_TRUE(far.out_of_reach);
  EXPECT_FALSE(SelectModulation(3999, table).out_of_reach);
}

TEST(Modulation, MatchesLinearScan) {
  const auto table = ModulationTable::Default();
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> km(0.0, 6000.0);
  for (int i = 0; i < 2000; ++i) {
    const double d = km(rng);
    int best = 1;
    for (const auto& f : table.formats()) {
      if (d <= f.max_reach_km) best = std::max(best, f.bits_per_symbol);
    }
    EXPECT_EQ(SelectModulation(d, table).bits_per_symbol, best) << d;
  }
}

TEST(Modulation, FileMatchesDefault) {
  const auto file = LoadModulationTable(testing::DataPath("modulation.csv"));
  const auto builtin = ModulationTable::Default();
  ASSERT_EQ(file.formats().size(), builtin.formats().size());
  for (std::size_t i = 0; i < file.formats().size(); ++i) {
    EXPECT_EQ(file.formats()[i].bits_per_symbol,
              builtin.formats()[i].bits_per_symbol);
    EXPECT_EQ(file.formats()[i].max_reach_km,
              builtin.formats()[i].max_reach_km);
  }
}

TEST(Modulation, TableValidation) {
  auto read = [](const std::string& text) {
    std::istringstream in(text);
    return ReadModulationCsv(in);
  };
  EXPECT_THROW(read("name,bits_per_symbol,max_reach_km\nQPSK,2,2000\n"),
               ConfigError);
  EXPECT_THROW(
      read("name,bits_per_symbol,max_reach_km\nBPSK,1,1000\nQPSK,2,2000\n"),
      ConfigError);
}

TEST(Modulation, RequiredSlots) {
  EXPECT_EQ(RequiredSlots(105, 2, 10.5, 0), 5);
  EXPECT_EQ(RequiredSlots(0, 2, 10.5, 0), 0);
  EXPECT_EQ(RequiredSlots(0, 2, 10.5, 1), 0);
  EXPECT_EQ(RequiredSlots(1, 4, 10.5, 0), 1);
  EXPECT_EQ(RequiredSlots(105.0001, 2, 10.5, 0), 6);
  EXPECT_EQ(RequiredSlots(105, 2, 10.5, 1), 6);
}

TEST(Modulation, RequiredSlotsMonotone) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> gbps(0.0, 400.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = gbps(rng), b = gbps(rng);
    for (int m = 1; m <= 4; ++m) {
      EXPECT_EQ(RequiredSlots(std::min(a, b), m, 10.5, 0) <=
                    RequiredSlots(std::max(a, b), m, 10.5, 0),
                true);
      if (m < 4) {
        EXPECT_GE(RequiredSlots(a, m, 10.5, 0),
                  RequiredSlots(a, m + 1, 10.5, 0));
      }
    }
  }
}

}  // namespace
}  // namespace eonplan
