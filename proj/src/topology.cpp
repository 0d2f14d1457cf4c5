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

#include "eonplan/topology.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <set>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "eonplan/csv.hpp"
#include "eonplan/error.hpp"

namespace eonplan {

Topology::Topology(std::span<const Fiber> fibers) {
  std::set<std::string> ids;
  for (const auto& f : fibers) {
    if (f.a.empty() || f.b.empty()) {
      throw ValidationError("fiber with an empty node id");
    }
    if (f.a == f.b) throw ValidationError("self-loop fiber at " + f.a);
    if (!std::isfinite(f.length_km) || !(f.length_km > 0.0)) {
      throw ValidationError("fiber " + f.a + "-" + f.b +
                            " needs a positive length");
    }
    ids.insert(f.a);
    ids.insert(f.b);
  }
  ids_.assign(ids.begin(), ids.end());
  out_.resize(ids_.size());
  in_.resize(ids_.size());

  std::set<std::pair<NodeIndex, NodeIndex>> seen;
  for (const auto& f : fibers) {
    const NodeIndex a = node(f.a);
    const NodeIndex b = node(f.b);
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
      throw ValidationError("duplicate fiber " + f.a + "-" + f.b);
    }
    for (auto [from, to] : {std::pair{a, b}, std::pair{b, a}}) {
      out_[from].push_back(links_.size());
      in_[to].push_back(links_.size());
      links_.push_back(Link{from, to, f.length_km});
    }
  }
  auto by_head = [this](LinkIndex x, LinkIndex y) {
    return links_[x].to < links_[y].to;
  };
  auto by_tail = [this](LinkIndex x, LinkIndex y) {
    return links_[x].from < links_[y].from;
  };
  for (auto& v : out_) std::sort(v.begin(), v.end(), by_head);
  for (auto& v : in_) std::sort(v.begin(), v.end(), by_tail);
}

std::optional<NodeIndex> Topology::FindNode(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<NodeIndex>(it - ids_.begin());
}

NodeIndex Topology::node(std::string_view id) const {
  if (auto n = FindNode(id)) return *n;
  throw ConfigError("unknown node '" + std::string(id) + "'");
}

std::optional<LinkIndex> Topology::FindLink(NodeIndex from, NodeIndex to) const {
  for (LinkIndex l : out_.at(from)) {
    if (links_[l].to == to) return l;
  }
  return std::nullopt;
}

std::string Topology::LinkName(LinkIndex l) const {
  return ids_[links_.at(l).from] + "->" + ids_[links_.at(l).to];
}

double GreatCircleKm(double lon1, double lat1, double lon2, double lat2) {
  constexpr double kEarthRadiusKm = 6371.0;
  constexpr double kRad = std::numbers::pi / 180.0;
  const double dlat = (lat2 - lat1) * kRad;
  const double dlon = (lon2 - lon1) * kRad;
  const double h = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(lat1 * kRad) * std::cos(lat2 * kRad) *
                       std::sin(dlon / 2) * std::sin(dlon / 2);
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

Topology ReadTopologyCsv(std::istream& in, std::string_view name) {
  csv::Reader reader(in);
  std::vector<std::string> row;
  if (!reader.Next(row)) throw ParseError(std::string(name) + ": empty file");
  if (row.size() != 3 || csv::Trim(row[0]) != "node_a" ||
      csv::Trim(row[1]) != "node_b" || csv::Trim(row[2]) != "length_km") {
    throw ParseError(std::string(name) +
                     " line 1: header must be node_a,node_b,length_km");
  }
  std::vector<Fiber> fibers;
  while (reader.Next(row)) {
    const std::string where =
        std::string(name) + " line " + std::to_string(reader.line());
    if (row.size() != 3) throw ParseError(where + ": expected 3 fields");
    fibers.push_back(Fiber{std::string(csv::Trim(row[0])),
                           std::string(csv::Trim(row[1])),
                           csv::ParseDouble(row[2], where)});
  }
  if (fibers.empty()) throw ParseError(std::string(name) + ": no fibers");
  return Topology(fibers);
}

Topology ReadSndlibNetwork(const std::filesystem::path& path) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_xml(path.string(), tree);
  } catch (const pt::xml_parser_error& e) {
    throw ParseError(path.string() + " line " + std::to_string(e.line()) +
                     ": " + e.message());
  }
  const auto structure = tree.get_child_optional("network.networkStructure");
  if (!structure) {
    throw ParseError(path.string() + ": missing <network><networkStructure>");
  }
  std::map<std::string, std::pair<double, double>> coords;
  for (const auto& [tag, node] : structure->get_child("nodes", pt::ptree())) {
    if (tag != "node") continue;
    const auto id = node.get_optional<std::string>("<xmlattr>.id");
    const auto x = node.get_optional<std::string>("coordinates.x");
    const auto y = node.get_optional<std::string>("coordinates.y");
    if (!id || !x || !y) {
      throw ParseError(path.string() +
                       ": <node> needs an id and <coordinates><x><y>");
    }
    const std::string where = path.string() + " <node id=" + *id + ">";
    coords[*id] = {csv::ParseDouble(*x, where), csv::ParseDouble(*y, where)};
  }
  std::vector<Fiber> fibers;
  for (const auto& [tag, link] : structure->get_child("links", pt::ptree())) {
    if (tag != "link") continue;
    const auto src = link.get_optional<std::string>("source");
    const auto dst = link.get_optional<std::string>("target");
    const std::string where =
        path.string() + " <link id=" +
        link.get<std::string>("<xmlattr>.id", "?") + ">";
    if (!src || !dst) throw ParseError(where + ": needs <source> and <target>");
    const auto a = coords.find(std::string(csv::Trim(*src)));
    const auto b = coords.find(std::string(csv::Trim(*dst)));
    if (a == coords.end() || b == coords.end()) {
      throw ParseError(where + ": endpoint is not a declared node");
    }
    fibers.push_back(Fiber{a->first, b->first,
                           GreatCircleKm(a->second.first, a->second.second,
                                         b->second.first, b->second.second)});
  }
  if (fibers.empty()) throw ParseError(path.string() + ": no <link> elements");
  return Topology(fibers);
}

Topology LoadTopology(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    throw ConfigError("topology file not found: " + path.string());
  }
  if (path.extension() == ".xml") return ReadSndlibNetwork(path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open topology file: " + path.string());
  return ReadTopologyCsv(in, path.string());
}

void WriteTopologyCsv(std::ostream& out, const Topology& topology) {
  out << "node_a,node_b,length_km\n";
  for (const auto& l : topology.links()) {
    if (l.from < l.to) {
      out << csv::Escape(topology.node_id(l.from)) << ','
          << csv::Escape(topology.node_id(l.to)) << ','
          << csv::FormatDouble(l.length_km) << '\n';
    }
  }
}

}  // namespace eonplan
