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

#include "eonplan/routing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <set>

#include "eonplan/error.hpp"

namespace eonplan {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Shortest src->dst path avoiding banned nodes and links. Among equally
// short paths the one with the smallest node sequence is returned: distances
// to dst are computed first, then the path is walked greedily from src
// through the smallest tight successor.
std::optional<Path> LexMinShortestPath(const Topology& topo, NodeIndex src,
                                       NodeIndex dst,
                                       const std::vector<bool>& banned_node,
                                       const std::vector<bool>& banned_link) {
  const std::size_t n = topo.node_count();
  std::vector<double> dist(n, kInf);
  using Item = std::pair<double, NodeIndex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[dst] = 0.0;
  heap.emplace(0.0, dst);
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[v]) continue;
    for (LinkIndex l : topo.in_links(v)) {
      const NodeIndex w = topo.link(l).from;
      if (banned_link[l] || banned_node[w]) continue;
      const double nd = d + topo.link(l).length_km;
      if (nd < dist[w]) {
        dist[w] = nd;
        heap.emplace(nd, w);
      }
    }
  }
  if (dist[src] == kInf) return std::nullopt;

  Path path;
  path.nodes.push_back(src);
  for (NodeIndex v = src; v != dst;) {
    const double tol = 1e-9 * std::max(1.0, dist[v]);
    std::optional<LinkIndex> next;
    for (LinkIndex l : topo.out_links(v)) {  // sorted by head index
      const NodeIndex w = topo.link(l).to;
      if (banned_link[l] || banned_node[w] || dist[w] == kInf) continue;
      if (std::abs(topo.link(l).length_km + dist[w] - dist[v]) <= tol) {
        next = l;
        break;
      }
    }
    if (!next) return std::nullopt;  // unreachable with positive lengths
    path.links.push_back(*next);
    v = topo.link(*next).to;
    path.nodes.push_back(v);
  }
  return path;
}

void Recompute(const Topology& topo, Path& path) {
  path.length_km = 0.0;
  for (LinkIndex l : path.links) path.length_km += topo.link(l).length_km;
}

}  // namespace

bool PathLess(const Path& a, const Path& b) {
  if (a.length_km != b.length_km) return a.length_km < b.length_km;
  return a.nodes < b.nodes;
}

Path MakePath(const Topology& topology, const std::vector<NodeIndex>& nodes) {
  Path p;
  p.nodes = nodes;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    auto l = topology.FindLink(nodes[i], nodes[i + 1]);
    if (!l) {
      throw ValidationError("no link " + topology.node_id(nodes[i]) + "->" +
                            topology.node_id(nodes[i + 1]));
    }
    p.links.push_back(*l);
  }
  Recompute(topology, p);
  return p;
}

std::string FormatPath(const Topology& topology, const Path& path) {
  std::string out;
  for (std::size_t i = 0; i < path.nodes.size(); ++i) {
    if (i) out += '-';
    out += topology.node_id(path.nodes[i]);
  }
  return out;
}

std::vector<Path> KShortestPaths(const Topology& topology, NodeIndex src,
                                 NodeIndex dst, int kappa) {
  if (src >= topology.node_count() || dst >= topology.node_count()) {
    throw ConfigError("k-shortest-paths: node index out of range");
  }
  if (src == dst) throw ConfigError("k-shortest-paths: src == dst");
  if (kappa < 1) throw ConfigError("k-shortest-paths: kappa must be >= 1");

  std::vector<bool> banned_node(topology.node_count(), false);
  std::vector<bool> banned_link(topology.link_count(), false);

  std::vector<Path> accepted;
  auto first = LexMinShortestPath(topology, src, dst, banned_node, banned_link);
  if (!first) return accepted;
  Recompute(topology, *first);
  accepted.push_back(std::move(*first));

  std::set<Path, decltype(&PathLess)> candidates(&PathLess);
  while (static_cast<int>(accepted.size()) < kappa) {
    const Path& last = accepted.back();
    for (std::size_t i = 0; i + 1 < last.nodes.size(); ++i) {
      const NodeIndex spur = last.nodes[i];
      std::fill(banned_node.begin(), banned_node.end(), false);
      std::fill(banned_link.begin(), banned_link.end(), false);
      for (std::size_t j = 0; j < i; ++j) banned_node[last.nodes[j]] = true;
      for (const Path& p : accepted) {
        if (p.nodes.size() > i + 1 &&
            std::equal(p.nodes.begin(), p.nodes.begin() + static_cast<std::ptrdiff_t>(i + 1),
                       last.nodes.begin())) {
          banned_link[p.links[i]] = true;
        }
      }
      auto spur_path =
          LexMinShortestPath(topology, spur, dst, banned_node, banned_link);
      if (!spur_path) continue;
      Path total;
      total.nodes.assign(last.nodes.begin(),
                         last.nodes.begin() + static_cast<std::ptrdiff_t>(i));
      total.links.assign(last.links.begin(),
                         last.links.begin() + static_cast<std::ptrdiff_t>(i));
      total.nodes.insert(total.nodes.end(), spur_path->nodes.begin(),
                         spur_path->nodes.end());
      total.links.insert(total.links.end(), spur_path->links.begin(),
                         spur_path->links.end());
      Recompute(topology, total);
      if (std::find(accepted.begin(), accepted.end(), total) == accepted.end()) {
        candidates.insert(std::move(total));
      }
    }
    if (candidates.empty()) break;
    accepted.push_back(*candidates.begin());
    candidates.erase(candidates.begin());
  }
  return accepted;
}

}  // namespace eonplan
