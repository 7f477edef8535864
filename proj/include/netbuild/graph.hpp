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

#ifndef NETBUILD_GRAPH_HPP
#define NETBUILD_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace netbuild {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Ascending, duplicate-free list of node ids.
class NodeSet {
 public:
  NodeSet() = default;
  /// Sorts and deduplicates.
  explicit NodeSet(std::vector<NodeId> members);
  NodeSet(std::initializer_list<NodeId> members)
      : NodeSet(std::vector<NodeId>(members)) {}

  static NodeSet range(NodeId n);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(NodeId v) const;
  NodeId front() const { return members_.front(); }
  NodeId back() const { return members_.back(); }

  /// Inserts v keeping the order; no-op if already present.
  void insert(NodeId v);

  std::span<const NodeId> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;
  friend auto operator<=>(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<NodeId> members_;
};

/// Immutable undirected simple graph over ids 0..n-1, stored as CSR with
/// each neighbor list sorted ascending. Connectedness is not required.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Drops self-loops and duplicate edges. Throws InputError naming the
  /// first pair with an id >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t node_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(NodeId a, NodeId b) const;

  /// Each undirected edge once, as (low, high), in ascending order.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `keep`, relabelled densely in ascending order of
  /// the original ids (new id i corresponds to keep.members()[i]).
  Graph induced(const NodeSet& keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
};

// Named graphs used throughout tests and examples.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

}  // namespace netbuild

#endif  // NETBUILD_GRAPH_HPP
