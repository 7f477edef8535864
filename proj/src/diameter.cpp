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

#include "netbuild/diameter.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "netbuild/error.hpp"
#include "netbuild/rng.hpp"

namespace netbuild {

namespace {

void require_reducible(const MetricProfile& p, Hops delta) {
  if (delta < 2) throw PreconditionError("delta must be at least 2");
  if (delta >= p.diameter) {
    throw PreconditionError("delta " + std::to_string(delta) + " must be below the diameter " +
                            std::to_string(p.diameter));
  }
}

Graph current_graph(const Graph& g, const NodeSet& s) { return s.empty() ? g : augment(g, s); }

}  // namespace

bool is_delta_enabling(const Graph& g, const NodeSet& s, Hops delta) {
  return diameter(augment(g, s)) <= delta;
}

NodeSet preserve_diameter(const Graph& g) {
  if (g.node_count() < 2) throw PreconditionError("need at least two nodes");
  const MetricProfile p = metric_profile(g);
  if (p.radius != p.diameter) return NodeSet{p.center.front()};
  if (is_complete(g)) return NodeSet::range(static_cast<NodeId>(g.node_count()));
  NodeId v = 0;
  for (NodeId w = 1; w < g.node_count(); ++w) {
    if (g.degree(w) < g.degree(v)) v = w;
  }
  return NodeSet(std::vector<NodeId>(g.neighbors(v).begin(), g.neighbors(v).end()));
}

SearchResult brute_force_min_delta_enabling(const Graph& g, Hops delta, std::size_t size_cap) {
  if (delta < 2) throw PreconditionError("delta must be at least 2");
  if (!is_connected(g)) throw PreconditionError("graph not connected");
  const std::size_t n = g.node_count();
  SearchResult result;
  std::vector<NodeId> idx;
  for (std::size_t k = 1; k <= std::min(size_cap, n); ++k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<NodeId>(i);
    while (true) {
      NodeSet s(idx);
      if (is_delta_enabling(g, s, delta)) return {SearchStatus::kFound, std::move(s)};
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return result;
}

std::string_view to_string(DiameterHeuristic h) {
  return h == DiameterHeuristic::kPeriphery ? "periphery" : "cp";
}

std::optional<DiameterHeuristic> parse_diameter_heuristic(std::string_view name) {
  if (name == "periphery") return DiameterHeuristic::kPeriphery;
  if (name == "cp") return DiameterHeuristic::kCenterPeriphery;
  return std::nullopt;
}

DeltaReport periphery_algorithm(const Graph& g, Hops delta, std::uint64_t seed,
                                const DeltaOptions& options) {
  MetricProfile p = metric_profile(g, options.deadline);
  require_reducible(p, delta);
  const auto newcomer = static_cast<NodeId>(g.node_count());
  Rng rng(seed);
  DeltaReport report;
  report.diameter_trace.push_back(p.diameter);

  while (p.diameter > delta) {
    const Graph cur = current_graph(g, report.s);
    // Peripheral pairs (a, b), a < b, whose links are not all in place yet.
    // Only periphery nodes can be endpoints.
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (NodeId a : p.periphery) {
      options.deadline.check();
      const auto dist = bfs_distances(cur, a);
      for (NodeId b : p.periphery) {
        if (b <= a || dist[b] != p.diameter) continue;
        const bool a_done = a == newcomer || report.s.contains(a);
        const bool b_done = b == newcomer || report.s.contains(b);
        if (!(a_done && b_done)) pairs.emplace_back(a, b);
      }
    }
    if (pairs.empty()) throw std::logic_error("no peripheral pair left to link");
    const auto [a, b] = pairs[rng.below(pairs.size())];
    for (NodeId x : {a, b}) {
      if (x != newcomer && !report.s.contains(x)) {
        report.s.insert(x);
        report.picks.push_back(x);
      }
    }
    ++report.iterations;
    p = metric_profile(augment(g, report.s), options.deadline);
    report.diameter_trace.push_back(p.diameter);
  }
  report.edges_added = report.s.size();
  report.achieved_diameter = p.diameter;
  return report;
}

DeltaReport cp_algorithm(const Graph& g, Hops delta, std::uint64_t seed,
                         const DeltaOptions& options) {
  MetricProfile p = metric_profile(g, options.deadline);
  require_reducible(p, delta);
  const Hops base_radius = p.radius;
  const auto newcomer = static_cast<NodeId>(g.node_count());
  Rng rng(seed);
  DeltaReport report;
  report.diameter_trace.push_back(p.diameter);

  const NodeId first = p.center.members()[rng.below(p.center.size())];
  report.s.insert(first);
  report.picks.push_back(first);
  ++report.iterations;
  Graph cur = augment(g, report.s);
  p = metric_profile(cur, options.deadline);
  report.diameter_trace.push_back(p.diameter);

  while (p.diameter > delta) {
    std::vector<NodeId> candidates;
    for (NodeId w : p.periphery) {
      if (w != newcomer && !report.s.contains(w)) candidates.push_back(w);
    }
    // A diameter above 2 always has a peripheral endpoint outside S.
    if (candidates.empty()) throw std::logic_error("periphery fully linked");
    const NodeId w = candidates[rng.below(candidates.size())];
    report.s.insert(w);
    report.picks.push_back(w);
    ++report.iterations;
    cur = augment(g, report.s);
    p = metric_profile(cur, options.deadline);
    report.diameter_trace.push_back(p.diameter);
    if (options.check_cp_bound && p.ecc[w] > base_radius + 2) {
      throw std::logic_error("eccentricity of linked periphery node " + std::to_string(w) +
                             " exceeds radius + 2");
    }
  }
  report.edges_added = report.s.size();
  report.achieved_diameter = p.diameter;
  return report;
}

DeltaReport run_diameter_heuristic(const Graph& g, DiameterHeuristic h, Hops delta,
                                   std::uint64_t seed, const DeltaOptions& options) {
  return h == DiameterHeuristic::kPeriphery ? periphery_algorithm(g, delta, seed, options)
                                            : cp_algorithm(g, delta, seed, options);
}

}  // namespace netbuild
