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

#ifndef NETBUILD_GENERATORS_HPP
#define NETBUILD_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netbuild/graph.hpp"

namespace netbuild {

enum class RandomModel { kBarabasiAlbert, kNewmanWattsStrogatz };

std::string_view to_string(RandomModel m);  // "ba" / "nws"
std::optional<RandomModel> parse_random_model(std::string_view name);

struct RandomModelParams {
  RandomModel model = RandomModel::kBarabasiAlbert;
  std::size_t n = 0;
  std::size_t ba_m = 2;     // edges per arriving node
  std::size_t nws_k = 4;    // even ring degree
  double nws_p = 0.1;       // shortcut probability per ring edge
  std::uint64_t seed = 0;

  /// Throws InputError when the parameters break the model's invariants.
  void validate() const;
  /// "ba(n=100,m=2)" / "nws(n=50,k=4,p=0.1)", used in CSV metadata.
  std::string describe() const;
};

/// Preferential attachment grown from a star on ba_m + 1 nodes. Each new
/// node links to ba_m distinct existing nodes drawn proportionally to
/// degree (draws with replacement, repeats rejected).
Graph gen_ba(const RandomModelParams& params);

/// Ring lattice (each node linked to nws_k / 2 neighbors per side) plus,
/// for every lattice edge (i, j) in order, a shortcut from i to a uniform
/// random other node with probability nws_p. Nothing is rewired.
Graph gen_nws(const RandomModelParams& params);

Graph generate(const RandomModelParams& params);

/// Node layout of the domination-to-broker reduction: gadget id of copy
/// `layer` (1, 2 or 3) of original node v is (layer - 1) * n + v.
class GadgetMap {
 public:
  explicit GadgetMap(std::size_t n) : n_(n) {}

  std::size_t original_count() const { return n_; }
  NodeId id(NodeId v, int layer) const {
    return static_cast<NodeId>((layer - 1) * n_ + v);
  }
  NodeId original(NodeId gadget_id) const { return static_cast<NodeId>(gadget_id % n_); }
  int layer(NodeId gadget_id) const { return static_cast<int>(gadget_id / n_) + 1; }

  /// Original nodes with at least one copy in d.
  NodeSet project(const NodeSet& d) const;
  /// Layer-2 copies of the members of s.
  NodeSet lift(const NodeSet& s) const;

 private:
  std::size_t n_;
};

struct Gadget {
  Graph h;
  GadgetMap map;
};

/// Builds H from G: each node becomes a path v1-v2-v3, layer 1 is a clique,
/// layer 2 copies G. Minimum broker sets of H have the size of minimum
/// dominating sets of G. Requires G connected with radius >= 2.
Gadget reduction_gadget(const Graph& g);

}  // namespace netbuild

#endif  // NETBUILD_GENERATORS_HPP
