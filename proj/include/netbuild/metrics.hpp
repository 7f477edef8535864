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

#ifndef NETBUILD_METRICS_HPP
#define NETBUILD_METRICS_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "netbuild/deadline.hpp"
#include "netbuild/graph.hpp"

namespace netbuild {

/// Hop count. Unreachable nodes carry kUnreachable.
using Hops = std::uint32_t;
inline constexpr Hops kUnreachable = std::numeric_limits<Hops>::max();

inline bool reachable(Hops d) { return d != kUnreachable; }

std::vector<Hops> bfs_distances(const Graph& g, NodeId source);

/// BFS that stops expanding past `max_depth`; nodes beyond it stay
/// kUnreachable.
std::vector<Hops> bfs_distances(const Graph& g, NodeId source, Hops max_depth);

bool is_connected(const Graph& g);

struct MetricProfile {
  std::vector<Hops> ecc;
  Hops radius = 0;
  Hops diameter = 0;
  NodeSet center;
  NodeSet periphery;
};

/// All eccentricities by one BFS per node. Throws PreconditionError on a
/// disconnected or empty graph.
MetricProfile metric_profile(const Graph& g, const Deadline& deadline = {});

Hops radius(const Graph& g);
Hops diameter(const Graph& g);

/// Radius equals diameter. Requires a connected graph.
bool is_diametrically_uniform(const Graph& g);
bool is_complete(const Graph& g);

struct Component {
  Graph graph;
  /// new id -> original id
  std::vector<NodeId> original_ids;
};

/// Largest connected component; equal sizes resolve to the component
/// holding the smallest original id.
Component largest_connected_component(const Graph& g);

/// Connected components as node sets, ordered by smallest member.
std::vector<NodeSet> connected_components(const Graph& g);

/// Shortest-path betweenness over unordered pairs, endpoints excluded,
/// each pair contributing the fraction of its shortest paths through the
/// node (Brandes accumulation).
std::vector<double> betweenness(const Graph& g, const Deadline& deadline = {});

/// G with a newcomer appended as node n, linked to every member of s.
/// Throws PreconditionError on an empty s and InputError on ids >= n.
Graph augment(const Graph& g, const NodeSet& s);

}  // namespace netbuild

#endif  // NETBUILD_METRICS_HPP
