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

#include "netbuild/metrics.hpp"

#include <algorithm>
#include <string>

#include "netbuild/error.hpp"

namespace netbuild {

namespace {

void require_source(const Graph& g, NodeId source) {
  if (source >= g.node_count()) {
    throw InputError("source " + std::to_string(source) + " out of range for n=" +
                     std::to_string(g.node_count()));
  }
}

// BFS into caller-owned buffers; returns the eccentricity among reached
// nodes and the number reached.
std::pair<Hops, std::size_t> bfs_into(const Graph& g, NodeId source, std::vector<Hops>& dist,
                                      std::vector<NodeId>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreachable);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    const Hops next = dist[v] + 1;
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = next;
        queue.push_back(w);
      }
    }
  }
  return {dist[queue.back()], queue.size()};
}

}  // namespace

std::vector<Hops> bfs_distances(const Graph& g, NodeId source) {
  return bfs_distances(g, source, kUnreachable);
}

std::vector<Hops> bfs_distances(const Graph& g, NodeId source, Hops max_depth) {
  require_source(g, source);
  std::vector<Hops> dist(g.node_count(), kUnreachable);
  std::vector<NodeId> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    if (dist[v] >= max_depth) continue;
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.node_count() == 0) return false;
  std::vector<Hops> dist(g.node_count());
  std::vector<NodeId> queue;
  return bfs_into(g, 0, dist, queue).second == g.node_count();
}

MetricProfile metric_profile(const Graph& g, const Deadline& deadline) {
  const std::size_t n = g.node_count();
  if (n == 0) throw PreconditionError("graph is empty");

  MetricProfile p;
  p.ecc.resize(n);
  std::vector<Hops> dist(n);
  std::vector<NodeId> queue;
  queue.reserve(n);
  for (NodeId v = 0; v < n; ++v) {
    if ((v & 63) == 0) deadline.check();
    auto [ecc, reached] = bfs_into(g, v, dist, queue);
    if (reached != n) throw PreconditionError("graph not connected");
    p.ecc[v] = ecc;
  }
  auto [lo, hi] = std::minmax_element(p.ecc.begin(), p.ecc.end());
  p.radius = *lo;
  p.diameter = *hi;
  std::vector<NodeId> center, periphery;
  for (NodeId v = 0; v < n; ++v) {
    if (p.ecc[v] == p.radius) center.push_back(v);
    if (p.ecc[v] == p.diameter) periphery.push_back(v);
  }
  p.center = NodeSet(std::move(center));
  p.periphery = NodeSet(std::move(periphery));
  return p;
}

Hops radius(const Graph& g) { return metric_profile(g).radius; }
Hops diameter(const Graph& g) { return metric_profile(g).diameter; }

bool is_diametrically_uniform(const Graph& g) {
  const auto p = metric_profile(g);
  return p.radius == p.diameter;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.node_count();
  return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::vector<NodeSet> connected_components(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<bool> seen(n, false);
  std::vector<NodeSet> out;
  std::vector<NodeId> queue;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    queue.assign(1, s);
    seen[s] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (NodeId w : g.neighbors(queue[head])) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    out.emplace_back(queue);
  }
  return out;
}

Component largest_connected_component(const Graph& g) {
  const auto comps = connected_components(g);
  if (comps.empty()) return {};
  // Components are ordered by smallest member, so the first maximum wins ties.
  const auto best = std::max_element(comps.begin(), comps.end(),
                                     [](const NodeSet& a, const NodeSet& b) {
                                       return a.size() < b.size();
                                     });
  return {g.induced(*best), std::vector<NodeId>(best->begin(), best->end())};
}

std::vector<double> betweenness(const Graph& g, const Deadline& deadline) {
  const std::size_t n = g.node_count();
  std::vector<double> score(n, 0.0);
  std::vector<Hops> dist(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<NodeId> order;
  order.reserve(n);

  for (NodeId s = 0; s < n; ++s) {
    if ((s & 15) == 0) deadline.check();
    std::fill(dist.begin(), dist.end(), kUnreachable);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.assign(1, s);
    dist[s] = 0;
    sigma[s] = 1.0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId v = order[head];
      for (NodeId w : g.neighbors(v)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    // Predecessors of w are exactly the neighbors one level closer to s.
    for (std::size_t i = order.size(); i-- > 1;) {
      const NodeId w = order[i];
      for (NodeId v : g.neighbors(w)) {
        if (dist[v] + 1 == dist[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      score[w] += delta[w];
    }
  }
  // Every unordered pair was accumulated from both endpoints.
  for (double& x : score) x /= 2.0;
  return score;
}

Graph augment(const Graph& g, const NodeSet& s) {
  if (s.empty()) throw PreconditionError("broker set must be non-empty");
  const std::size_t n = g.node_count();
  if (s.back() >= n) {
    throw InputError("node id " + std::to_string(s.back()) + " out of range for n=" +
                     std::to_string(n));
  }
  std::vector<Edge> e = g.edges();
  const auto u = static_cast<NodeId>(n);
  for (NodeId v : s) e.emplace_back(v, u);
  return Graph::from_edges(n + 1, e);
}

}  // namespace netbuild
