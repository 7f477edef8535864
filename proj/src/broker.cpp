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

#include "netbuild/broker.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "netbuild/error.hpp"
#include "netbuild/metrics.hpp"

namespace netbuild {

namespace {

constexpr NodeId kNone = static_cast<NodeId>(-1);

// Relative tolerance when comparing betweenness scores, so that ties
// produced by different summation orders still resolve to the smaller id.
constexpr double kScoreTolerance = 1e-9;

bool strictly_greater(double a, double b) {
  return a > b + kScoreTolerance * std::max(1.0, std::abs(b));
}

// Uncovered nodes U, with an optional restriction of distances to the
// subgraph F induced by U.
class CoverState {
 public:
  CoverState(const Graph& g, Hops radius)
      : g_(g), reach_(radius - 1), uncovered_(g.node_count(), true), left_(g.node_count()) {}

  bool done() const { return left_ == 0; }
  bool uncovered(NodeId v) const { return uncovered_[v]; }
  std::size_t left() const { return left_; }

  /// Removes every uncovered node within distance radius-1 of `from`. With
  /// `within_f` the search only walks through uncovered nodes; `from`
  /// itself must then be uncovered. Returns how many nodes were removed.
  std::size_t cover(NodeId from, bool within_f) {
    queue_.assign(1, from);
    depth_.assign(1, 0);
    visited_.assign(g_.node_count(), false);
    visited_[from] = true;
    std::size_t removed = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const NodeId v = queue_[head];
      if (depth_[head] >= reach_) continue;
      for (NodeId w : g_.neighbors(v)) {
        if (visited_[w] || (within_f && !uncovered_[w])) continue;
        visited_[w] = true;
        queue_.push_back(w);
        depth_.push_back(depth_[head] + 1);
      }
    }
    for (NodeId v : queue_) {
      if (uncovered_[v]) {
        uncovered_[v] = false;
        ++removed;
      }
    }
    left_ -= removed;
    return removed;
  }

  /// Whether cover(from, false) would remove anything.
  bool would_cover(NodeId from) const {
    for (NodeId v : bfs_distances_within(from)) {
      if (uncovered_[v]) return true;
    }
    return false;
  }

  std::size_t f_degree(NodeId v) const {
    std::size_t d = 0;
    for (NodeId w : g_.neighbors(v)) d += uncovered_[w] ? 1 : 0;
    return d;
  }

  NodeSet uncovered_set() const {
    std::vector<NodeId> out;
    out.reserve(left_);
    for (NodeId v = 0; v < g_.node_count(); ++v)
      if (uncovered_[v]) out.push_back(v);
    return NodeSet(std::move(out));
  }

 private:
  std::vector<NodeId> bfs_distances_within(NodeId from) const {
    const auto dist = bfs_distances(g_, from, reach_);
    std::vector<NodeId> out;
    for (NodeId v = 0; v < dist.size(); ++v)
      if (reachable(dist[v])) out.push_back(v);
    return out;
  }

  const Graph& g_;
  Hops reach_;
  std::vector<bool> uncovered_;
  std::size_t left_;
  std::vector<NodeId> queue_;
  std::vector<Hops> depth_;
  std::vector<bool> visited_;
};

// Follows a walk from `start`: at each step moves to the eligible neighbor
// of maximum degree (smallest id on ties), never straight back to the
// previous node, and stops after radius-1 steps or at a dead end.
template <typename Eligible, typename Degree>
NodeId min_leaf_walk(const Graph& g, NodeId start, Hops radius, Eligible eligible,
                     Degree degree) {
  NodeId prev = kNone;
  NodeId cur = start;
  for (Hops step = 1; step < radius; ++step) {
    NodeId best = kNone;
    std::size_t best_degree = 0;
    for (NodeId w : g.neighbors(cur)) {
      if (w == prev || !eligible(w)) continue;
      const std::size_t d = degree(w);
      if (best == kNone || d > best_degree) {
        best = w;
        best_degree = d;
      }
    }
    if (best == kNone) break;
    prev = cur;
    cur = best;
  }
  return cur;
}

void record_progress(std::size_t removed) {
  if (removed == 0) throw std::logic_error("broker heuristic made no progress");
}

NodeSet run_greedy(const Graph& g, BrokerHeuristic h, Hops r, const Deadline& deadline) {
  CoverState state(g, r);
  std::vector<NodeId> s;
  const std::size_t n = g.node_count();

  while (!state.done()) {
    deadline.check();
    NodeId pick = kNone;
    switch (h) {
      case BrokerHeuristic::kMax: {
        std::size_t best = 0;
        for (NodeId v = 0; v < n; ++v) {
          if (!state.uncovered(v)) continue;
          const std::size_t d = state.f_degree(v);
          if (pick == kNone || d > best) {
            pick = v;
            best = d;
          }
        }
        break;
      }
      case BrokerHeuristic::kBtw: {
        const NodeSet u = state.uncovered_set();
        const auto score = betweenness(g.induced(u), deadline);
        std::size_t best = 0;
        for (std::size_t i = 1; i < u.size(); ++i) {
          if (strictly_greater(score[i], score[best])) best = i;
        }
        pick = u.members()[best];
        break;
      }
      case BrokerHeuristic::kMinLeaf: {
        NodeId leaf = kNone;
        std::size_t best = 0;
        for (NodeId v = 0; v < n; ++v) {
          if (!state.uncovered(v)) continue;
          const std::size_t d = state.f_degree(v);
          if (leaf == kNone || d < best) {
            leaf = v;
            best = d;
          }
        }
        pick = min_leaf_walk(
            g, leaf, r, [&](NodeId w) { return state.uncovered(w); },
            [&](NodeId w) { return state.f_degree(w); });
        break;
      }
      default:
        throw std::logic_error("not an unsimplified heuristic");
    }
    s.push_back(pick);
    record_progress(state.cover(pick, /*within_f=*/true));
  }
  return NodeSet(std::move(s));
}

NodeSet run_simplified(const Graph& g, BrokerHeuristic h, Hops r, const Deadline& deadline) {
  CoverState state(g, r);
  std::vector<NodeId> s;
  const std::size_t n = g.node_count();
  std::vector<double> score;
  if (h == BrokerHeuristic::kSimplifiedBtw) score = betweenness(g, deadline);

  while (!state.done()) {
    deadline.check();
    NodeId pick = kNone;
    switch (h) {
      case BrokerHeuristic::kSimplifiedMax:
        for (NodeId v = 0; v < n; ++v) {
          if (state.uncovered(v) && (pick == kNone || g.degree(v) > g.degree(pick))) pick = v;
        }
        break;
      case BrokerHeuristic::kSimplifiedBtw:
        for (NodeId v = 0; v < n; ++v) {
          if (state.uncovered(v) && (pick == kNone || strictly_greater(score[v], score[pick])))
            pick = v;
        }
        break;
      case BrokerHeuristic::kSimplifiedMinLeaf: {
        NodeId leaf = kNone;
        for (NodeId v = 0; v < n; ++v) {
          if (state.uncovered(v) && (leaf == kNone || g.degree(v) < g.degree(leaf))) leaf = v;
        }
        pick = min_leaf_walk(
            g, leaf, r, [](NodeId) { return true; }, [&](NodeId w) { return g.degree(w); });
        break;
      }
      default:
        throw std::logic_error("not a simplified heuristic");
    }
    s.push_back(pick);
    record_progress(state.cover(pick, /*within_f=*/false));
  }
  return NodeSet(std::move(s));
}

NodeId min_degree_center(const Graph& g, const MetricProfile& p) {
  NodeId v = kNone;
  for (NodeId c : p.center) {
    if (v == kNone || g.degree(c) < g.degree(v)) v = c;
  }
  return v;
}

NodeSet run_center(const Graph& g, const MetricProfile& p) {
  const NodeId v = min_degree_center(g, p);
  NodeSet s(std::vector<NodeId>(g.neighbors(v).begin(), g.neighbors(v).end()));
  // With radius 1 the coverage reach is zero, so v must cover itself.
  if (p.radius == 1) s.insert(v);
  return s;
}

// Smallest eccentricity inside `c` if some node has eccentricity <= limit,
// together with the smallest id attaining it. BFS runs are cut off at
// depth limit + 1, so nodes that cannot qualify stay cheap.
std::optional<std::pair<Hops, NodeId>> center_within(const Graph& c, Hops limit,
                                                     const Deadline& deadline) {
  std::optional<std::pair<Hops, NodeId>> best;
  const std::size_t n = c.node_count();
  for (NodeId v = 0; v < n; ++v) {
    if ((v & 63) == 0) deadline.check();
    const auto dist = bfs_distances(c, v, limit);
    Hops ecc = 0;
    bool all = true;
    for (Hops d : dist) {
      if (!reachable(d)) {
        all = false;
        break;
      }
      ecc = std::max(ecc, d);
    }
    if (all && (!best || ecc < best->first)) best = {ecc, v};
  }
  return best;
}

NodeSet run_imp_center(const Graph& g, const MetricProfile& p, const Deadline& deadline) {
  const Hops r = p.radius;
  const NodeId v = min_degree_center(g, p);
  std::vector<NodeId> order(g.neighbors(v).begin(), g.neighbors(v).end());
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });

  CoverState state(g, r);
  std::vector<NodeId> s;
  std::size_t next = 0;
  while (!state.done()) {
    deadline.check();
    const NodeSet u = state.uncovered_set();
    const Graph f = g.induced(u);
    const auto comps = connected_components(f);
    const auto largest = std::max_element(
        comps.begin(), comps.end(),
        [](const NodeSet& a, const NodeSet& b) { return a.size() < b.size(); });
    NodeId pick = kNone;

    // rad(C) < r - 1 means some node of C has eccentricity <= r - 2.
    if (r >= 2) {
      if (auto c = center_within(f.induced(*largest), r - 2, deadline)) {
        pick = u.members()[largest->members()[c->second]];
      }
    }
    if (pick == kNone) {
      // Neighbors whose coverage ball is already fully covered add nothing.
      while (next < order.size() && !state.would_cover(order[next])) ++next;
      if (next < order.size()) pick = order[next++];
    }
    if (pick == kNone) {
      // All neighbors used: fall back to the center of the largest component.
      auto c = center_within(f.induced(*largest), kUnreachable - 1, deadline);
      pick = u.members()[largest->members()[c->second]];
    }
    s.push_back(pick);
    record_progress(state.cover(pick, /*within_f=*/false));
  }
  return NodeSet(std::move(s));
}

void require_broker_input(const Graph& g) {
  if (g.node_count() < 2) throw PreconditionError("broker heuristics need at least two nodes");
}

template <typename Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit visit) {
  if (k > n) return false;
  std::vector<NodeId> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<NodeId>(i);
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::string_view to_string(BrokerHeuristic h) {
  switch (h) {
    case BrokerHeuristic::kMax: return "max";
    case BrokerHeuristic::kBtw: return "btw";
    case BrokerHeuristic::kMinLeaf: return "ml";
    case BrokerHeuristic::kSimplifiedMax: return "s-max";
    case BrokerHeuristic::kSimplifiedBtw: return "s-btw";
    case BrokerHeuristic::kSimplifiedMinLeaf: return "s-ml";
    case BrokerHeuristic::kCenter: return "center";
    case BrokerHeuristic::kImpCenter: return "imp-center";
  }
  return "?";
}

std::optional<BrokerHeuristic> parse_broker_heuristic(std::string_view name) {
  for (BrokerHeuristic h : kAllBrokerHeuristics) {
    if (to_string(h) == name) return h;
  }
  return std::nullopt;
}

bool is_sub_radius_dominating(const Graph& g, const NodeSet& s) {
  if (s.empty()) throw PreconditionError("set must be non-empty");
  if (s.back() >= g.node_count()) throw InputError("node id out of range");
  const Hops r = radius(g);
  if (r == 0) return true;
  // One BFS from all members at once, limited to depth r - 1.
  std::vector<Hops> dist(g.node_count(), kUnreachable);
  std::vector<NodeId> queue(s.begin(), s.end());
  for (NodeId v : s) dist[v] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    if (dist[v] + 1 >= r) continue;
    for (NodeId w : g.neighbors(v)) {
      if (!reachable(dist[w])) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return queue.size() == g.node_count();
}

bool is_broker_set(const Graph& g, const NodeSet& s) {
  if (!is_connected(g)) throw PreconditionError("graph not connected");
  const Graph joined = augment(g, s);
  const auto p = metric_profile(joined);
  return p.ecc[g.node_count()] == p.radius;
}

NodeSet broker_set(const Graph& g, BrokerHeuristic h, const Deadline& deadline) {
  require_broker_input(g);
  const MetricProfile p = metric_profile(g, deadline);
  switch (h) {
    case BrokerHeuristic::kMax:
    case BrokerHeuristic::kBtw:
    case BrokerHeuristic::kMinLeaf:
      return run_greedy(g, h, p.radius, deadline);
    case BrokerHeuristic::kSimplifiedMax:
    case BrokerHeuristic::kSimplifiedBtw:
    case BrokerHeuristic::kSimplifiedMinLeaf:
      return run_simplified(g, h, p.radius, deadline);
    case BrokerHeuristic::kCenter:
      return run_center(g, p);
    case BrokerHeuristic::kImpCenter:
      return run_imp_center(g, p, deadline);
  }
  throw std::logic_error("unknown heuristic");
}

AlgorithmReport run_heuristic(const Graph& g, BrokerHeuristic h, std::uint64_t /*seed*/,
                              const HeuristicOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  AlgorithmReport report{h, broker_set(g, h, options.deadline)};
  report.elapsed = std::chrono::steady_clock::now() - start;
  report.size = report.s.size();
  report.valid = options.verify ? is_broker_set(g, report.s)
                                : is_sub_radius_dominating(g, report.s);
  return report;
}

SearchResult brute_force_min_broker(const Graph& g, std::size_t size_cap) {
  if (!is_connected(g)) throw PreconditionError("graph not connected");
  const std::size_t n = g.node_count();
  SearchResult result;
  for (std::size_t k = 1; k <= std::min(size_cap, n); ++k) {
    const bool hit = for_each_combination(n, k, [&](const std::vector<NodeId>& idx) {
      NodeSet s(idx);
      if (!is_broker_set(g, s)) return false;
      result = {SearchStatus::kFound, std::move(s)};
      return true;
    });
    if (hit) return result;
  }
  return result;
}

NodeSet brute_force_min_dominating(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) return {};
  if (n > 64) throw PreconditionError("exhaustive domination supports at most 64 nodes");
  std::vector<std::uint64_t> closed(n);
  for (NodeId v = 0; v < n; ++v) {
    closed[v] = std::uint64_t{1} << v;
    for (NodeId w : g.neighbors(v)) closed[v] |= std::uint64_t{1} << w;
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  NodeSet found;
  for (std::size_t k = 1; k <= n; ++k) {
    const bool hit = for_each_combination(n, k, [&](const std::vector<NodeId>& idx) {
      std::uint64_t covered = 0;
      for (NodeId v : idx) covered |= closed[v];
      if (covered != all) return false;
      found = NodeSet(idx);
      return true;
    });
    if (hit) break;
  }
  return found;
}

bool broker_decision(const Graph& g, std::size_t k) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  return brute_force_min_broker(g, k).found();
}

}  // namespace netbuild
