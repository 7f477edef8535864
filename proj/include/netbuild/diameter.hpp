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

#ifndef NETBUILD_DIAMETER_HPP
#define NETBUILD_DIAMETER_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "netbuild/broker.hpp"
#include "netbuild/deadline.hpp"
#include "netbuild/graph.hpp"
#include "netbuild/metrics.hpp"

namespace netbuild {

// Delta-enabling sets: S such that linking a newcomer to S leaves the
// combined network with diameter at most delta.

bool is_delta_enabling(const Graph& g, const NodeSet& s, Hops delta);

/// A diam(G)-enabling set:
///  - G not diametrically uniform: the minimum-eccentricity node;
///  - G complete: every node;
///  - otherwise: the neighborhood of a minimum-degree node.
/// Ties go to the smallest id. Requires a connected graph with n >= 2.
NodeSet preserve_diameter(const Graph& g);

/// Smallest delta-enabling set (size order, then lexicographic). Throws
/// PreconditionError for delta < 2.
SearchResult brute_force_min_delta_enabling(const Graph& g, Hops delta, std::size_t size_cap);

enum class DiameterHeuristic { kPeriphery, kCenterPeriphery };

std::string_view to_string(DiameterHeuristic h);
std::optional<DiameterHeuristic> parse_diameter_heuristic(std::string_view name);

struct DeltaReport {
  NodeSet s;
  std::size_t edges_added = 0;
  Hops achieved_diameter = 0;
  std::size_t iterations = 0;
  /// Nodes in the order they were linked, for replaying a run.
  std::vector<NodeId> picks;
  /// Per-iteration diameter of the current graph, starting with diam(G).
  std::vector<Hops> diameter_trace;
};

struct DeltaOptions {
  Deadline deadline;
  /// Center-Periphery only: after linking a periphery node w, require
  /// ecc(w) <= r + 2 with r the radius of the input graph; a violation
  /// throws std::logic_error.
  bool check_cp_bound = true;
};

/// Links the newcomer to both ends of a uniformly drawn peripheral pair of
/// the current graph until its diameter is at most delta.
/// Requires a connected graph and 2 <= delta < diam(G).
DeltaReport periphery_algorithm(const Graph& g, Hops delta, std::uint64_t seed,
                                const DeltaOptions& options = {});

/// Links the newcomer to a uniformly drawn center node, then to uniformly
/// drawn periphery nodes of the current graph not yet linked, until the
/// diameter is at most delta. Same preconditions as periphery_algorithm.
DeltaReport cp_algorithm(const Graph& g, Hops delta, std::uint64_t seed,
                         const DeltaOptions& options = {});

DeltaReport run_diameter_heuristic(const Graph& g, DiameterHeuristic h, Hops delta,
                                   std::uint64_t seed, const DeltaOptions& options = {});

}  // namespace netbuild

#endif  // NETBUILD_DIAMETER_HPP
