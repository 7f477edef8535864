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

#ifndef NETBUILD_EXPERIMENTS_HPP
#define NETBUILD_EXPERIMENTS_HPP

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "netbuild/broker.hpp"
#include "netbuild/diameter.hpp"
#include "netbuild/generators.hpp"

namespace netbuild {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// One CSV row. Detail rows describe a single (graph, algorithm) run;
/// summary rows aggregate detail rows; stats rows describe a dataset.
struct ExperimentRecord {
  std::string record = "detail";  // detail | summary | stats
  int experiment = 0;
  std::optional<std::size_t> graph_id;
  std::string source;  // model or dataset name
  std::string params;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::optional<Hops> radius;
  std::optional<Hops> diameter;
  std::string algorithm;
  std::optional<Hops> delta;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> output_size;
  std::optional<std::size_t> optimal_size;
  std::optional<std::size_t> edges_added;
  std::optional<Hops> achieved_diameter;
  std::optional<bool> valid;
  std::string status = "ok";  // ok | timeout | skipped | missing | cap_exceeded | match | mismatch
  std::optional<double> elapsed_ms;
  std::optional<std::size_t> samples;
  std::optional<double> mean_output_size;
  std::optional<double> mean_edges_added;
  std::optional<double> optimality_rate;
  std::string note;
};

/// Fixed column order of the CSV body.
const std::vector<std::string>& csv_columns();

/// RFC 4180 quoting: fields containing a comma, quote, CR or LF are
/// wrapped in quotes with embedded quotes doubled.
std::string csv_escape(const std::string& field);

std::vector<std::string> csv_fields(const ExperimentRecord& r);

struct ExperimentOutput {
  int experiment = 0;
  /// Written as leading "# key=value" lines.
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<ExperimentRecord> records;
};

void write_csv(std::ostream& out, const ExperimentOutput& result);

/// Published size and distance properties of a real network, used for opt-in checks.
struct DatasetStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t largest_component = 0;
  Hops diameter = 0;
  Hops radius = 0;
};

struct DatasetDescriptor {
  std::string name;
  std::filesystem::path path;
  std::optional<DatasetStats> expected;
};

/// Published properties for facebook, enron, col1 and col2.
std::optional<DatasetStats> known_dataset_stats(const std::string& name);

struct ExperimentConfig {
  std::uint64_t master_seed = 1;
  std::vector<RandomModel> models = {RandomModel::kBarabasiAlbert,
                                     RandomModel::kNewmanWattsStrogatz};
  std::vector<std::size_t> sizes;  // empty: experiment default
  std::size_t per_cell = 0;        // 0: experiment default
  std::vector<BrokerHeuristic> heuristics = {kAllBrokerHeuristics.begin(),
                                             kAllBrokerHeuristics.end()};
  std::size_t ba_m = 2;
  std::size_t nws_k = 4;
  double nws_p = 0.1;
  /// Largest n handed to the exhaustive broker oracle.
  std::size_t oracle_limit = 14;
  std::chrono::milliseconds timeout{10 * 60 * 1000};
  std::vector<DatasetDescriptor> datasets;
  Hops max_reduction = 4;  // experiment 5: delta = diam - i, 1 <= i <= max_reduction
  bool verify = true;      // full broker-set check on every output
  bool timing = false;     // fill elapsed_ms (makes output run-dependent)
};

/// Seed of the i-th generated graph: child_seed(master_seed, i).
ExperimentOutput run_experiment_1(const ExperimentConfig& config);
ExperimentOutput run_experiment_2(const ExperimentConfig& config);
ExperimentOutput run_experiment_3(const ExperimentConfig& config);
ExperimentOutput run_experiment_4(const ExperimentConfig& config);
ExperimentOutput run_experiment_5(const ExperimentConfig& config);

ExperimentOutput run_experiment(int id, const ExperimentConfig& config);

}  // namespace netbuild

#endif  // NETBUILD_EXPERIMENTS_HPP
