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

#ifndef NETBUILD_BROKER_HPP
#define NETBUILD_BROKER_HPP

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "netbuild/deadline.hpp"
#include "netbuild/graph.hpp"

namespace netbuild {

// Broker sets: S such that a newcomer linked to exactly S has minimum
// eccentricity in the combined network.

enum class BrokerHeuristic {
  kMax,
  kBtw,
  kMinLeaf,
  kSimplifiedMax,
  kSimplifiedBtw,
  kSimplifiedMinLeaf,
  kCenter,
  kImpCenter,
};

inline constexpr std::array<BrokerHeuristic, 8> kAllBrokerHeuristics = {
    BrokerHeuristic::kMax,           BrokerHeuristic::kBtw,
    BrokerHeuristic::kMinLeaf,       BrokerHeuristic::kSimplifiedMax,
    BrokerHeuristic::kSimplifiedBtw, BrokerHeuristic::kSimplifiedMinLeaf,
    BrokerHeuristic::kCenter,        BrokerHeuristic::kImpCenter,
};

/// CLI spelling: max, btw, ml, s-max, s-btw, s-ml, center, imp-center.
std::string_view to_string(BrokerHeuristic h);
std::optional<BrokerHeuristic> parse_broker_heuristic(std::string_view name);

/// Every node outside s lies within distance rad(g) - 1 of some member.
bool is_sub_radius_dominating(const Graph& g, const NodeSet& s);

/// ecc(u) == rad(g with u linked to s).
bool is_broker_set(const Graph& g, const NodeSet& s);

struct HeuristicOptions {
  /// Check the output with is_broker_set (all-pairs BFS on the augmented
  /// graph). When false, `valid` comes from is_sub_radius_dominating, which
  /// implies the broker property and costs a single multi-source BFS.
  bool verify = true;
  Deadline deadline;
};

struct AlgorithmReport {
  BrokerHeuristic heuristic;
  NodeSet s;
  std::size_t size = 0;
  bool valid = false;
  std::chrono::nanoseconds elapsed{0};
};

/// Runs one heuristic. All eight are deterministic; `seed` is accepted so
/// that every algorithm shares one calling convention. Requires a connected
/// graph with at least two nodes.
AlgorithmReport run_heuristic(const Graph& g, BrokerHeuristic h, std::uint64_t seed = 0,
                              const HeuristicOptions& options = {});

/// Only the set, without validation or timing.
NodeSet broker_set(const Graph& g, BrokerHeuristic h, const Deadline& deadline = {});

enum class SearchStatus { kFound, kCapExceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::kCapExceeded;
  NodeSet set;  // meaningful when status == kFound

  bool found() const { return status == SearchStatus::kFound; }
};

/// Smallest broker set by enumerating subsets in order of size, then
/// lexicographically. Sizes above `size_cap` are not tried.
SearchResult brute_force_min_broker(const Graph& g, std::size_t size_cap);

/// Smallest dominating set, lexicographically first among minima.
/// Intended for n <= 64.
NodeSet brute_force_min_dominating(const Graph& g);

/// Whether g has a broker set with at most k members.
bool broker_decision(const Graph& g, std::size_t k);

}  // namespace netbuild

#endif  // NETBUILD_BROKER_HPP
