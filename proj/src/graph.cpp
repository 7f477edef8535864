// Copyright 2026 The netbuild Authors
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

#include "netbuild/graph.hpp"

#include <algorithm>
#include <string>

#include "netbuild/error.hpp"

namespace netbuild {

NodeSet::NodeSet(std::vector<NodeId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

NodeSet NodeSet::range(NodeId n) {
  NodeSet s;
  s.members_.resize(n);
  for (NodeId i = 0; i < n; ++i) s.members_[i] = i;
  return s;
}

bool NodeSet::contains(NodeId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void NodeSet::insert(NodeId v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> directed;
  directed.reserve(edges.size() * 2);
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      const NodeId bad = a >= n ? a : b;
      throw InputError("node id " + std::to_string(bad) + " out of range in pair (" +
                       std::to_string(a) + ", " + std::to_string(b) + ") for n=" +
                       std::to_string(n));
    }
    if (a == b) continue;
    directed.emplace_back(a, b);
    directed.emplace_back(b, a);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  g.targets_.reserve(directed.size());
  for (const auto& [a, b] : directed) {
    ++g.offsets_[a + 1];
    g.targets_.push_back(b);
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  return g;
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  if (a >= node_count() || b >= node_count()) return false;
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId a = 0; a < node_count(); ++a) {
    for (NodeId b : neighbors(a)) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

Graph Graph::induced(const NodeSet& keep) const {
  constexpr NodeId kDropped = static_cast<NodeId>(-1);
  std::vector<NodeId> relabel(node_count(), kDropped);
  NodeId next = 0;
  for (NodeId v : keep) relabel.at(v) = next++;

  std::vector<Edge> sub;
  for (NodeId v : keep) {
    for (NodeId w : neighbors(v)) {
      if (v < w && relabel[w] != kDropped) sub.emplace_back(relabel[v], relabel[w]);
    }
  }
  return from_edges(keep.size(), sub);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

}  // namespace netbuild
