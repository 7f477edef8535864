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

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "netbuild/broker.hpp"
#include "netbuild/error.hpp"
#include "netbuild/metrics.hpp"
#include "test_support.hpp"

namespace netbuild {
namespace {

RandomModelParams ba(std::size_t n, std::size_t m, std::uint64_t seed) {
  RandomModelParams p;
  p.model = RandomModel::kBarabasiAlbert;
  p.n = n;
  p.ba_m = m;
  p.seed = seed;
  return p;
}

RandomModelParams nws(std::size_t n, std::size_t k, double prob, std::uint64_t seed) {
  RandomModelParams p;
  p.model = RandomModel::kNewmanWattsStrogatz;
  p.n = n;
  p.nws_k = k;
  p.nws_p = prob;
  p.seed = seed;
  return p;
}

TEST(BarabasiAlbertTest, SingleEdgePerNodeGivesTree) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gen_ba(ba(10, 1, seed));
    EXPECT_EQ(g.node_count(), 10u);
    EXPECT_EQ(g.edge_count(), 9u);
    EXPECT_TRUE(is_connected(g));
  }
}

TEST(BarabasiAlbertTest, EdgeCountFollowsConstruction) {
  // Star on m + 1 nodes, then m edges for each of the remaining n - m - 1.
  const Graph g = gen_ba(ba(100, 2, 5));
  EXPECT_EQ(g.node_count(), 100u);
  EXPECT_EQ(g.edge_count(), 2u * 97 + 2);
  EXPECT_TRUE(is_connected(g));
}

TEST(BarabasiAlbertTest, Deterministic) {
  EXPECT_EQ(gen_ba(ba(300, 3, 42)).edges(), gen_ba(ba(300, 3, 42)).edges());
  EXPECT_NE(gen_ba(ba(300, 3, 42)).edges(), gen_ba(ba(300, 3, 43)).edges());
}

TEST(BarabasiAlbertTest, InvalidParams) {
  EXPECT_THROW(gen_ba(ba(5, 0, 1)), InputError);
  EXPECT_THROW(gen_ba(ba(5, 5, 1)), InputError);
}

TEST(BarabasiAlbertTest, MaxDegreeGrowsWithSize) {
  auto mean_max_degree = [](std::size_t n) {
    double total = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Graph g = gen_ba(ba(n, 2, seed));
      std::size_t best = 0;
      for (NodeId v = 0; v < n; ++v) best = std::max(best, g.degree(v));
      total += static_cast<double>(best);
    }
    return total / 10;
  };
  const double small = mean_max_degree(100), large = mean_max_degree(1000);
  RecordProperty("mean_max_degree_100", std::to_string(small));
  RecordProperty("mean_max_degree_1000", std::to_string(large));
  EXPECT_GT(large, small);
}

TEST(NewmanWattsStrogatzTest, NoShortcutsIsCycle) {
  EXPECT_EQ(gen_nws(nws(8, 2, 0.0, 1)), cycle_graph(8));
}

TEST(NewmanWattsStrogatzTest, RingLattice) {
  const Graph g = gen_nws(nws(8, 4, 0.0, 1));
  EXPECT_EQ(g.edge_count(), 16u);
  for (NodeId v = 0; v < 8; ++v) {
    EXPECT_EQ(g.degree(v), 4u);
    EXPECT_TRUE(g.has_edge(v, (v + 2) % 8));
  }
}

TEST(NewmanWattsStrogatzTest, ShortcutsOnlyAdd) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gen_nws(nws(50, 4, 0.3, seed));
    EXPECT_TRUE(is_connected(g));
    EXPECT_GE(g.edge_count(), 100u);
    for (NodeId v = 0; v < 50; ++v) {
      EXPECT_TRUE(g.has_edge(v, (v + 1) % 50));
      EXPECT_TRUE(g.has_edge(v, (v + 2) % 50));
    }
  }
}

TEST(NewmanWattsStrogatzTest, AllShortcuts) {
  const Graph g = gen_nws(nws(30, 2, 1.0, 3));
  EXPECT_GT(g.edge_count(), 30u);
  EXPECT_EQ(g, gen_nws(nws(30, 2, 1.0, 3)));
}

TEST(NewmanWattsStrogatzTest, InvalidParams) {
  EXPECT_THROW(gen_nws(nws(10, 3, 0.1, 1)), InputError);
  EXPECT_THROW(gen_nws(nws(10, 0, 0.1, 1)), InputError);
  EXPECT_THROW(gen_nws(nws(4, 4, 0.1, 1)), InputError);
  EXPECT_THROW(gen_nws(nws(10, 2, 1.5, 1)), InputError);
  EXPECT_THROW(gen_nws(nws(10, 2, -0.1, 1)), InputError);
}

TEST(ModelTest, NamesAndDescriptions) {
  EXPECT_EQ(parse_random_model("ba"), RandomModel::kBarabasiAlbert);
  EXPECT_EQ(parse_random_model("nws"), RandomModel::kNewmanWattsStrogatz);
  EXPECT_FALSE(parse_random_model("er"));
  EXPECT_EQ(ba(100, 2, 0).describe(), "ba(n=100,m=2)");
  EXPECT_EQ(nws(50, 4, 0.1, 0).describe(), "nws(n=50,k=4,p=0.1)");
}

TEST(GadgetTest, PathOfFour) {
  const Gadget gadget = reduction_gadget(path_graph(4));
  const Graph& h = gadget.h;
  EXPECT_EQ(h.node_count(), 12u);
  // 4 layer paths of 2 edges, K4 on layer 1, P4 on layer 2.
  EXPECT_EQ(h.edge_count(), 8u + 6 + 3);
  for (NodeId v = 0; v < 4; ++v)
    for (NodeId w = v + 1; w < 4; ++w) EXPECT_TRUE(h.has_edge(gadget.map.id(v, 1), gadget.map.id(w, 1)));
  EXPECT_EQ(radius(h), 3u);
}

TEST(GadgetTest, Cycle) {
  const Gadget gadget = reduction_gadget(cycle_graph(6));
  EXPECT_EQ(gadget.h.node_count(), 18u);
  EXPECT_EQ(gadget.h.edge_count(), 33u);
  EXPECT_EQ(radius(gadget.h), 3u);
}

TEST(GadgetTest, RejectsRadiusOne) {
  EXPECT_THROW(reduction_gadget(complete_graph(3)), PreconditionError);
  EXPECT_THROW(reduction_gadget(Graph::from_edges(4, {{0, 1}, {2, 3}})), PreconditionError);
}

TEST(GadgetTest, MapProjectsAndLifts) {
  const GadgetMap map(5);
  EXPECT_EQ(map.id(3, 1), 3u);
  EXPECT_EQ(map.id(3, 2), 8u);
  EXPECT_EQ(map.id(3, 3), 13u);
  EXPECT_EQ(map.layer(13), 3);
  EXPECT_EQ(map.original(13), 3u);
  EXPECT_EQ(map.project(NodeSet{1, 6, 14}), (NodeSet{1, 4}));
  EXPECT_EQ(map.lift(NodeSet{0, 2}), (NodeSet{5, 7}));
}

TEST(GadgetTest, DominatingSetLiftsToBrokerSet) {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::random_connected(4 + rng.below(5), 0.2, rng);
    if (radius(g) < 2) continue;
    const Gadget gadget = reduction_gadget(g);
    const NodeSet dom = brute_force_min_dominating(g);
    EXPECT_TRUE(is_broker_set(gadget.h, gadget.map.lift(dom)));
  }
}

TEST(GadgetTest, MinBrokerEqualsDomination) {
  for (std::size_t n = 4; n <= 7; ++n) {
    for (const Graph& g : {path_graph(n), cycle_graph(n)}) {
      const Gadget gadget = reduction_gadget(g);
      const auto broker = brute_force_min_broker(gadget.h, n);
      ASSERT_TRUE(broker.found());
      EXPECT_EQ(broker.set.size(), brute_force_min_dominating(g).size()) << "n=" << n;
      EXPECT_EQ(gadget.map.project(broker.set).size(), broker.set.size());
    }
  }
}

}  // namespace
}  // namespace netbuild
