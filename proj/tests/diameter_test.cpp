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

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "netbuild/error.hpp"
#include "netbuild/generators.hpp"
#include "test_support.hpp"

namespace netbuild {
namespace {

using ::testing::ElementsAre;
using ::testing::UnorderedElementsAre;

std::vector<NodeId> ids(const NodeSet& s) { return {s.begin(), s.end()}; }

TEST(DeltaEnablingTest, Examples) {
  // P5 closed into a 6-cycle through the newcomer.
  EXPECT_TRUE(is_delta_enabling(path_graph(5), NodeSet{0, 4}, 3));
  EXPECT_FALSE(is_delta_enabling(path_graph(5), NodeSet{0, 4}, 2));
  EXPECT_TRUE(is_delta_enabling(path_graph(5), NodeSet{2}, 4));
  // dist(u, 3) = 1 + 3.
  EXPECT_FALSE(is_delta_enabling(cycle_graph(6), NodeSet{0}, 3));
}

TEST(DeltaEnablingTest, AgreesWithFloydOracle) {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.below(12);
    const Graph g = testing::random_connected(n, 0.1, rng);
    const auto s = testing::random_subset(n, 1 + rng.below(n), rng);
    const int d = testing::oracle_augmented_diameter(g, s);
    EXPECT_TRUE(is_delta_enabling(g, NodeSet(s), d));
    EXPECT_FALSE(is_delta_enabling(g, NodeSet(s), d - 1));
  }
}

TEST(PreserveDiameterTest, NotUniformUsesOneNode) {
  EXPECT_THAT(ids(preserve_diameter(path_graph(5))), ElementsAre(2));
  EXPECT_TRUE(is_delta_enabling(path_graph(5), NodeSet{2}, 4));
}

TEST(PreserveDiameterTest, CompleteUsesEverything) {
  EXPECT_EQ(preserve_diameter(complete_graph(4)), NodeSet::range(4));
  EXPECT_EQ(preserve_diameter(complete_graph(2)), NodeSet::range(2));
}

TEST(PreserveDiameterTest, UniformIncompleteUsesNeighborhood) {
  const NodeSet s = preserve_diameter(cycle_graph(6));
  EXPECT_THAT(ids(s), ElementsAre(1, 5));
  EXPECT_EQ(testing::oracle_augmented_diameter(cycle_graph(6), ids(s)), 3);
}

TEST(PreserveDiameterTest, AlwaysDiameterEnabling) {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.below(20);
    const Graph g = testing::random_connected(n, rng.unit() * 0.6, rng);
    const NodeSet s = preserve_diameter(g);
    const auto ecc = testing::eccentricities(testing::floyd(g));
    const int diam = *std::ranges::max_element(ecc);
    EXPECT_LE(testing::oracle_augmented_diameter(g, ids(s)), diam);
  }
}

TEST(BruteForceDeltaTest, Examples) {
  const auto c6 = brute_force_min_delta_enabling(cycle_graph(6), 3, 6);
  ASSERT_TRUE(c6.found());
  EXPECT_EQ(c6.set.size(), 2u);
  EXPECT_THAT(ids(c6.set), ElementsAre(0, 1));

  const auto p5 = brute_force_min_delta_enabling(path_graph(5), 4, 5);
  ASSERT_TRUE(p5.found());
  EXPECT_EQ(p5.set.size(), 1u);

  EXPECT_THROW(brute_force_min_delta_enabling(complete_graph(4), 1, 4), PreconditionError);
  EXPECT_EQ(brute_force_min_delta_enabling(cycle_graph(6), 3, 1).status,
            SearchStatus::kCapExceeded);
}

TEST(BruteForceDeltaTest, NoSingleNodePreservesUniformDiameter) {
  for (NodeId v = 0; v < 6; ++v) EXPECT_GT(testing::oracle_augmented_diameter(cycle_graph(6), {v}), 3);
}

TEST(PeripheryTest, PathNeedsBothEnds) {
  for (std::uint64_t seed : {0ull, 1ull, 77ull}) {
    const DeltaReport r = periphery_algorithm(path_graph(5), 3, seed);
    EXPECT_THAT(ids(r.s), ElementsAre(0, 4));
    EXPECT_EQ(r.edges_added, 2u);
    EXPECT_EQ(r.achieved_diameter, 3u);
    EXPECT_EQ(r.iterations, 1u);
    EXPECT_THAT(r.diameter_trace, ElementsAre(4, 3));
  }
}

TEST(PeripheryTest, Preconditions) {
  EXPECT_THROW(periphery_algorithm(path_graph(5), 4, 0), PreconditionError);
  EXPECT_THROW(periphery_algorithm(path_graph(5), 1, 0), PreconditionError);
  EXPECT_THROW(periphery_algorithm(Graph::from_edges(4, {{0, 1}, {2, 3}}), 2, 0),
               PreconditionError);
}

TEST(CenterPeripheryTest, PathLinksCenterThenBothEnds) {
  for (std::uint64_t seed : {0ull, 5ull, 1234ull}) {
    const DeltaReport r = cp_algorithm(path_graph(5), 3, seed);
    EXPECT_THAT(ids(r.s), ElementsAre(0, 2, 4));
    EXPECT_EQ(r.picks.front(), 2u);
    EXPECT_THAT(r.picks, UnorderedElementsAre(0, 2, 4));
    EXPECT_EQ(r.edges_added, 3u);
    EXPECT_EQ(r.achieved_diameter, 3u);
  }
}

TEST(CenterPeripheryTest, CycleNeedsMoreThanOneEdge) {
  // Delta must stay below the diameter, so C6 itself only admits delta 2.
  EXPECT_THROW(cp_algorithm(cycle_graph(6), 3, 0), PreconditionError);
  for (std::size_t n : {6, 7}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const DeltaReport r = cp_algorithm(cycle_graph(n), 2, seed);
      EXPECT_GE(r.edges_added, 2u);
      EXPECT_LE(r.achieved_diameter, 2u);
      EXPECT_TRUE(is_delta_enabling(cycle_graph(n), r.s, 2));
    }
  }
}

TEST(DiameterHeuristicTest, TerminateMonotoneAndEnabling) {
  Rng rng(19);
  int runs = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::random_connected(10 + rng.below(50), 0.02, rng);
    const Hops diam = diameter(g);
    if (diam < 3) continue;
    for (Hops delta = 2; delta < diam; ++delta) {
      for (DiameterHeuristic h : {DiameterHeuristic::kPeriphery, DiameterHeuristic::kCenterPeriphery}) {
        const DeltaReport r = run_diameter_heuristic(g, h, delta, trial);
        ++runs;
        EXPECT_LE(r.achieved_diameter, delta);
        EXPECT_EQ(r.edges_added, r.s.size());
        EXPECT_EQ(r.picks.size(), r.s.size());
        EXPECT_TRUE(is_delta_enabling(g, r.s, delta));
        // Once u is attached, further edges can only shorten paths.
        EXPECT_TRUE(std::is_sorted(r.diameter_trace.rbegin(), r.diameter_trace.rend() - 1));
      }
    }
  }
  EXPECT_GT(runs, 40);
}

TEST(DiameterHeuristicTest, DeterministicGivenSeed) {
  RandomModelParams p;
  p.n = 120;
  p.seed = 3;
  const Graph g = gen_ba(p);
  const Hops delta = diameter(g) - 1;
  for (DiameterHeuristic h : {DiameterHeuristic::kPeriphery, DiameterHeuristic::kCenterPeriphery}) {
    const auto a = run_diameter_heuristic(g, h, delta, 99);
    const auto b = run_diameter_heuristic(g, h, delta, 99);
    EXPECT_EQ(a.picks, b.picks);
    EXPECT_EQ(a.s, b.s);
  }
}

TEST(DiameterHeuristicTest, Names) {
  EXPECT_EQ(parse_diameter_heuristic("periphery"), DiameterHeuristic::kPeriphery);
  EXPECT_EQ(parse_diameter_heuristic("cp"), DiameterHeuristic::kCenterPeriphery);
  EXPECT_FALSE(parse_diameter_heuristic("center"));
}

}  // namespace
}  // namespace netbuild
