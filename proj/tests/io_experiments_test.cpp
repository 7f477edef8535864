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

#include <sstream>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "netbuild/error.hpp"
#include "netbuild/experiments.hpp"
#include "netbuild/io.hpp"
#include "netbuild/metrics.hpp"

namespace netbuild {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

LabeledGraph parse(const std::string& text, bool giant = false) {
  std::istringstream in(text);
  return parse_edge_list(in, giant);
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(EdgeListTest, Triangle) {
  const auto lg = parse("# comment\n10 20\n\n20 30\n30 10\n10 20\n");
  EXPECT_EQ(lg.graph.node_count(), 3u);
  EXPECT_EQ(lg.graph.edge_count(), 3u);
  EXPECT_THAT(lg.labels, ElementsAre(10, 20, 30));
}

TEST(EdgeListTest, SelfLoopsAndExtraColumns) {
  const auto lg = parse("1 2 0.5\n2 2\n2\t3\n");
  EXPECT_EQ(lg.graph.node_count(), 3u);
  EXPECT_EQ(lg.graph.edge_count(), 2u);
}

TEST(EdgeListTest, OnlySelfLoopIsEmpty) {
  EXPECT_THAT(error_of("7 7\n"), HasSubstr("empty"));
  EXPECT_THAT(error_of("# nothing\n"), HasSubstr("empty"));
}

TEST(EdgeListTest, MalformedLineReported) {
  EXPECT_THAT(error_of("1 2\n# c\n3 x\n"), HasSubstr("line 3"));
  EXPECT_THAT(error_of("1\n"), HasSubstr("line 1"));
  EXPECT_THAT(error_of("-1 2\n"), HasSubstr("line 1"));
}

TEST(EdgeListTest, GiantComponent) {
  const auto lg = parse("1 2\n2 3\n3 1\n8 9\n", /*giant=*/true);
  EXPECT_EQ(lg.graph.node_count(), 3u);
  EXPECT_EQ(lg.loaded_nodes, 5u);
  EXPECT_EQ(lg.loaded_edges, 4u);
  EXPECT_THAT(lg.labels, ElementsAre(1, 2, 3));
  EXPECT_TRUE(is_connected(lg.graph));
}

TEST(EdgeListTest, RoundTrip) {
  const Graph g = cycle_graph(7);
  std::ostringstream out;
  write_edge_list(out, g, {"ring"});
  EXPECT_THAT(out.str(), HasSubstr("# ring\n"));
  EXPECT_EQ(parse(out.str()).graph, g);
}

TEST(EdgeListTest, MissingFile) {
  EXPECT_THROW(load_edge_list("/nonexistent/file.txt"), InputError);
}

TEST(CsvTest, Escaping) {
  EXPECT_EQ(csv_escape("plain"), "plain");
  EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_escape("x\ny"), "\"x\ny\"");
  EXPECT_EQ(csv_escape(""), "");
}

TEST(CsvTest, FieldsMatchColumns) {
  ExperimentRecord r;
  r.experiment = 1;
  r.params = "ba(n=10,m=2)";
  r.valid = true;
  const auto f = csv_fields(r);
  ASSERT_EQ(f.size(), csv_columns().size());
  EXPECT_EQ(f[0], "detail");
  EXPECT_EQ(csv_columns().front(), "record");
}

TEST(CsvTest, MetadataThenHeader) {
  ExperimentOutput o;
  o.experiment = 2;
  o.metadata = {{"experiment", "2"}};
  o.records.emplace_back();
  std::ostringstream out;
  write_csv(out, o);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "# experiment=2");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("record,experiment,", 0), 0u);
}

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.models = {RandomModel::kBarabasiAlbert};
  c.sizes = {100};
  c.per_cell = 10;
  c.heuristics = {BrokerHeuristic::kMax, BrokerHeuristic::kSimplifiedMax};
  return c;
}

std::size_t count(const ExperimentOutput& o, const std::string& kind) {
  return static_cast<std::size_t>(
      std::ranges::count_if(o.records, [&](const auto& r) { return r.record == kind; }));
}

TEST(ExperimentTest, OneRowPerGraphAndHeuristic) {
  const auto out = run_experiment(1, small_config());
  EXPECT_EQ(count(out, "detail"), 20u);
  EXPECT_GT(count(out, "summary"), 0u);
  for (const auto& r : out.records) {
    if (r.record != "detail") continue;
    EXPECT_TRUE(r.valid.has_value());
    EXPECT_EQ(r.n, 100u);
    EXPECT_FALSE(r.elapsed_ms.has_value());
  }
}

TEST(ExperimentTest, Deterministic) {
  auto csv = [](int id, const ExperimentConfig& c) {
    std::ostringstream out;
    write_csv(out, run_experiment(id, c));
    return out.str();
  };
  const auto c = small_config();
  EXPECT_EQ(csv(1, c), csv(1, c));
  ExperimentConfig d = c;
  d.master_seed = 2;
  EXPECT_NE(csv(1, c), csv(1, d));
}

TEST(ExperimentTest, OracleComparison) {
  ExperimentConfig c = small_config();
  c.sizes = {10};
  c.per_cell = 5;
  const auto out = run_experiment(2, c);
  std::size_t details = 0;
  for (const auto& r : out.records) {
    if (r.record != "detail" || r.status != "ok") continue;
    ++details;
    ASSERT_TRUE(r.optimal_size && r.output_size);
    EXPECT_GE(*r.output_size, *r.optimal_size);
  }
  EXPECT_EQ(details, 10u);
}

TEST(ExperimentTest, DiameterRows) {
  ExperimentConfig c = small_config();
  c.per_cell = 4;
  const auto out = run_experiment(4, c);
  for (const auto& r : out.records) {
    if (r.record != "detail" || r.status != "ok") continue;
    ASSERT_TRUE(r.delta && r.achieved_diameter);
    EXPECT_LE(*r.achieved_diameter, *r.delta);
    EXPECT_EQ(r.valid, true);
  }
}

TEST(ExperimentTest, MissingDatasetIsReported) {
  ExperimentConfig c;
  c.datasets = {{"facebook", "/nonexistent/fb.txt", known_dataset_stats("facebook")}};
  const auto out = run_experiment(3, c);
  ASSERT_FALSE(out.records.empty());
  EXPECT_EQ(out.records.front().status, "missing");
}

TEST(ExperimentTest, KnownStats) {
  const auto fb = known_dataset_stats("facebook");
  ASSERT_TRUE(fb);
  EXPECT_EQ(fb->nodes, 4039u);
  EXPECT_EQ(fb->edges, 88234u);
  EXPECT_FALSE(known_dataset_stats("twitter"));
}

TEST(ExperimentTest, UnknownId) {
  EXPECT_THROW(run_experiment(6, ExperimentConfig{}), InputError);
}

}  // namespace
}  // namespace netbuild
