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


#include "fixtures.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "eonplan/synthetic.hpp"

namespace eonplan::testing {

std::filesystem::path SourceDir() { return EONPLAN_SOURCE_DIR; }

std::filesystem::path DataPath(const char* name) {
  return SourceDir() / "data" / name;
}

Topology AbileneTopology() { return LoadTopology(DataPath("abilene.xml")); }

TraceSet SyntheticAbileneTraces(std::uint64_t seed, double mean_pair_gbps) {
  SyntheticTraceOptions options;
  options.nodes = AbileneNodeIds();
  options.seed = seed;
  options.mean_pair_gbps = mean_pair_gbps;
  return AggregateDemands(GenerateDemands(options));
}

SlotMatrix WorkedExampleMatrix() {
  return {{5, 4, 2, 3}, {2, 3, 4, 2}, {3, 4, 5, 3}, {2, 2, 1, 4}};
}

std::optional<Placement> ExhaustiveFirstFit(const SpectrumGrid& grid,
                                            std::span<const Path> candidates,
                                            int width) {
  for (std::size_t p = 0; p < candidates.size(); ++p) {
    for (int start = 0; start + width <= grid.slots(); ++start) {
      bool fits = true;
      for (LinkIndex link : candidates[p].links) {
        for (int s = start; s < start + width; ++s) {
          if (grid.owner(link, s) != kFreeSlot) fits = false;
        }
      }
      if (fits) return Placement{p, start};
    }
  }
  return std::nullopt;
}

namespace {

void Enumerate(const Topology& topology, NodeIndex dst,
               std::vector<NodeIndex>& stack, std::vector<bool>& seen,
               std::vector<Path>& out) {
  const NodeIndex at = stack.back();
  if (at == dst) {
    out.push_back(MakePath(topology, stack));
    return;
  }
  for (LinkIndex l : topology.out_links(at)) {
    const NodeIndex next = topology.link(l).to;
    if (seen[next]) continue;
    seen[next] = true;
    stack.push_back(next);
    Enumerate(topology, dst, stack, seen, out);
    stack.pop_back();
    seen[next] = false;
  }
}

}  // namespace

std::vector<Path> BruteForceShortestPaths(const Topology& topology,
                                          NodeIndex src, NodeIndex dst,
                                          int kappa) {
  std::vector<Path> all;
  std::vector<NodeIndex> stack{src};
  std::vector<bool> seen(topology.node_count(), false);
  seen[src] = true;
  Enumerate(topology, dst, stack, seen, all);
  std::sort(all.begin(), all.end(), PathLess);
  if (all.size() > static_cast<std::size_t>(kappa)) {
    all.resize(static_cast<std::size_t>(kappa));
  }
  return all;
}

Topology RandomTopology(std::uint64_t seed, int nodes, double extra_edge_p) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(1, 9);
  std::bernoulli_distribution extra(extra_edge_p);
  auto id = [](int n) { return "n" + std::to_string(n); };
  std::vector<Fiber> fibers;
  std::vector<std::vector<bool>> joined(
      static_cast<std::size_t>(nodes),
      std::vector<bool>(static_cast<std::size_t>(nodes), false));
  auto join = [&](int a, int b) {
    joined[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    joined[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
    fibers.push_back({id(a), id(b), static_cast<double>(length(rng))});
  };
  for (int n = 1; n < nodes; ++n) {
    join(std::uniform_int_distribution<int>(0, n - 1)(rng), n);
  }
  for (int a = 0; a < nodes; ++a) {
    for (int b = a + 1; b < nodes; ++b) {
      if (!joined[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] &&
          extra(rng)) {
        join(a, b);
      }
    }
  }
  return Topology(fibers);
}

}  // namespace eonplan::testing
