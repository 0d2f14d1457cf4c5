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


#ifndef EONPLAN_TESTS_SUPPORT_FIXTURES_HPP_
#define EONPLAN_TESTS_SUPPORT_FIXTURES_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "eonplan/planner.hpp"
#include "eonplan/routing.hpp"
#include "eonplan/spectrum.hpp"
#include "eonplan/topology.hpp"
#include "eonplan/trace.hpp"

namespace eonplan::testing {

std::filesystem::path SourceDir();
std::filesystem::path DataPath(const char* name);

Topology AbileneTopology();

// Aggregated 17-day synthetic traces for the twelve Abilene sources.
TraceSet SyntheticAbileneTraces(std::uint64_t seed = 2004,
                                double mean_pair_gbps = 0.14);

// The 4x4 slot matrix whose plans reproduce the worked example.
SlotMatrix WorkedExampleMatrix();

// Scans every (path, start) in order; no run-length shortcuts.
std::optional<Placement> ExhaustiveFirstFit(const SpectrumGrid& grid,
                                            std::span<const Path> candidates,
                                            int width);

// Enumerates all simple paths and keeps the kappa smallest by length, then
// node sequence.
std::vector<Path> BruteForceShortestPaths(const Topology& topology,
                                          NodeIndex src, NodeIndex dst,
                                          int kappa);

// Connected graph on `nodes` vertices with integer link lengths.
Topology RandomTopology(std::uint64_t seed, int nodes, double extra_edge_p);

}  // namespace eonplan::testing

#endif  // EONPLAN_TESTS_SUPPORT_FIXTURES_HPP_
