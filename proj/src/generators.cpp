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

#include "netbuild/generators.hpp"

#include <algorithm>
#include <sstream>

#include "netbuild/error.hpp"
#include "netbuild/metrics.hpp"
#include "netbuild/rng.hpp"

namespace netbuild {

std::string_view to_string(RandomModel m) {
  return m == RandomModel::kBarabasiAlbert ? "ba" : "nws";
}

std::optional<RandomModel> parse_random_model(std::string_view name) {
  if (name == "ba") return RandomModel::kBarabasiAlbert;
  if (name == "nws") return RandomModel::kNewmanWattsStrogatz;
  return std::nullopt;
}

void RandomModelParams::validate() const {
  if (model == RandomModel::kBarabasiAlbert) {
    if (ba_m < 1 || ba_m >= n) throw InputError("BA requires 1 <= m < n");
  } else {
    if (nws_k % 2 != 0 || nws_k < 2 || nws_k >= n)
      throw InputError("NWS requires an even k with 2 <= k < n");
    if (!(nws_p >= 0.0 && nws_p <= 1.0)) throw InputError("NWS requires 0 <= p <= 1");
  }
}

std::string RandomModelParams::describe() const {
  std::ostringstream out;
  if (model == RandomModel::kBarabasiAlbert) {
    out << "ba(n=" << n << ",m=" << ba_m << ")";
  } else {
    out << "nws(n=" << n << ",k=" << nws_k << ",p=" << nws_p << ")";
  }
  return out.str();
}

Graph gen_ba(const RandomModelParams& params) {
  params.validate();
  const std::size_t m = params.ba_m;
  Rng rng(params.seed);
  std::vector<Edge> edges;
  // Every edge contributes both endpoints, so a uniform draw from this list
  // is a degree-proportional draw over nodes.
  std::vector<NodeId> endpoints;
  for (NodeId leaf = 1; leaf <= m; ++leaf) {
    edges.emplace_back(0, leaf);
    endpoints.push_back(0);
    endpoints.push_back(leaf);
  }
  std::vector<NodeId> targets;
  for (auto v = static_cast<NodeId>(m + 1); v < params.n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      const NodeId t = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (NodeId t : targets) {
      edges.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edges(params.n, edges);
}

Graph gen_nws(const RandomModelParams& params) {
  params.validate();
  const std::size_t n = params.n;
  Rng rng(params.seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; j <= params.nws_k / 2; ++j) {
      edges.emplace_back(i, (i + j) % n);
    }
  }
  const std::size_t ring = edges.size();
  for (std::size_t e = 0; e < ring; ++e) {
    if (!rng.bernoulli(params.nws_p)) continue;
    const NodeId from = edges[e].first;
    // Uniform over the n - 1 nodes other than `from`.
    auto to = static_cast<NodeId>(rng.below(n - 1));
    if (to >= from) ++to;
    edges.emplace_back(from, to);
  }
  return Graph::from_edges(n, edges);
}

Graph generate(const RandomModelParams& params) {
  return params.model == RandomModel::kBarabasiAlbert ? gen_ba(params) : gen_nws(params);
}

NodeSet GadgetMap::project(const NodeSet& d) const {
  std::vector<NodeId> out;
  for (NodeId x : d) out.push_back(original(x));
  return NodeSet(std::move(out));
}

NodeSet GadgetMap::lift(const NodeSet& s) const {
  std::vector<NodeId> out;
  for (NodeId v : s) out.push_back(id(v, 2));
  return NodeSet(std::move(out));
}

Gadget reduction_gadget(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("graph not connected");
  if (radius(g) < 2) throw PreconditionError("reduction requires radius >= 2");
  const std::size_t n = g.node_count();
  GadgetMap map(n);
  std::vector<Edge> edges;
  for (NodeId v = 0; v < n; ++v) {
    edges.emplace_back(map.id(v, 1), map.id(v, 2));
    edges.emplace_back(map.id(v, 2), map.id(v, 3));
    for (NodeId w = v + 1; w < n; ++w) edges.emplace_back(map.id(v, 1), map.id(w, 1));
  }
  for (const auto& [v, w] : g.edges()) edges.emplace_back(map.id(v, 2), map.id(w, 2));
  return {Graph::from_edges(3 * n, edges), map};
}

}  // namespace netbuild
