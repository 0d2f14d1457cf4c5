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

#ifndef EONPLAN_TOPOLOGY_HPP_
#define EONPLAN_TOPOLOGY_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eonplan {

using NodeIndex = std::size_t;
using LinkIndex = std::size_t;

struct Link {
  NodeIndex from = 0;
  NodeIndex to = 0;
  double length_km = 0.0;
};

struct Fiber {
  std::string a;
  std::string b;
  double length_km = 0.0;
};

// Immutable directed graph. Node indices follow the lexicographic order of
// node ids, so comparing index sequences compares id sequences. Every fiber
// becomes two directed links of equal length.
class Topology {
 public:
  explicit Topology(std::span<const Fiber> fibers);

  std::size_t node_count() const { return ids_.size(); }
  std::size_t link_count() const { return links_.size(); }
  const std::string& node_id(NodeIndex n) const { return ids_.at(n); }
  const std::vector<std::string>& node_ids() const { return ids_; }
  const Link& link(LinkIndex l) const { return links_.at(l); }
  const std::vector<Link>& links() const { return links_; }
  std::span<const LinkIndex> out_links(NodeIndex n) const { return out_.at(n); }
  std::span<const LinkIndex> in_links(NodeIndex n) const { return in_.at(n); }

  std::optional<NodeIndex> FindNode(std::string_view id) const;
  // Throws ConfigError naming the unknown id.
  NodeIndex node(std::string_view id) const;
  std::optional<LinkIndex> FindLink(NodeIndex from, NodeIndex to) const;

  std::string LinkName(LinkIndex l) const;

 private:
  std::vector<std::string> ids_;
  std::vector<Link> links_;
  std::vector<std::vector<LinkIndex>> out_;
  std::vector<std::vector<LinkIndex>> in_;
};

// csv with header `node_a,node_b,length_km`, one undirected fiber per row.
Topology ReadTopologyCsv(std::istream& in, std::string_view name = "<stream>");

// SNDlib network file: fiber lengths are great-circle distances between the
// geographical node coordinates.
Topology ReadSndlibNetwork(const std::filesystem::path& path);

// Chooses the reader from the file extension (.xml or anything else = csv).
Topology LoadTopology(const std::filesystem::path& path);

void WriteTopologyCsv(std::ostream& out, const Topology& topology);

// Haversine distance on a 6371 km sphere; inputs in degrees.
double GreatCircleKm(double lon1, double lat1, double lon2, double lat2);

}  // namespace eonplan

#endif  // EONPLAN_TOPOLOGY_HPP_
