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

#ifndef EONPLAN_ROUTING_HPP_
#define EONPLAN_ROUTING_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "eonplan/topology.hpp"

namespace eonplan {

struct Path {
  std::vector<NodeIndex> nodes;
  std::vector<LinkIndex> links;
  double length_km = 0.0;  // link lengths summed in path order

  bool empty() const { return links.empty(); }
  friend bool operator==(const Path& a, const Path& b) {
    return a.nodes == b.nodes;
  }
};

// Ascending length, ties broken by the node-id sequence.
bool PathLess(const Path& a, const Path& b);

// Builds a Path from a node sequence; throws ValidationError if two
// consecutive nodes are not joined by a link.
Path MakePath(const Topology& topology, const std::vector<NodeIndex>& nodes);

std::string FormatPath(const Topology& topology, const Path& path);

// Up to `kappa` loopless paths from src to dst in PathLess order (Yen).
// Returns an empty list when dst is unreachable.
std::vector<Path> KShortestPaths(const Topology& topology, NodeIndex src,
                                 NodeIndex dst, int kappa);

}  // namespace eonplan

#endif  // EONPLAN_ROUTING_HPP_
