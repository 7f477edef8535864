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

#include "netbuild/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "netbuild/error.hpp"
#include "netbuild/io.hpp"
#include "netbuild/metrics.hpp"
#include "netbuild/rng.hpp"

namespace netbuild {

namespace {

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

template <typename T>
std::string opt(const std::optional<T>& v) {
  if (!v) return {};
  if constexpr (std::is_same_v<T, bool>) {
    return *v ? "true" : "false";
  } else if constexpr (std::is_floating_point_v<T>) {
    return fixed(*v, 4);
  } else {
    return std::to_string(*v);
  }
}

double to_ms(std::chrono::nanoseconds d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ";" : "") << xs[i];
  return out.str();
}

struct GeneratedGraph {
  std::size_t id;
  RandomModelParams params;
  Graph graph;
};

std::vector<std::size_t> sizes_or(const ExperimentConfig& c, std::vector<std::size_t> fallback) {
  return c.sizes.empty() ? fallback : c.sizes;
}

std::size_t per_cell_or(const ExperimentConfig& c, std::size_t fallback) {
  return c.per_cell == 0 ? fallback : c.per_cell;
}

std::vector<GeneratedGraph> generate_graphs(const ExperimentConfig& c,
                                            const std::vector<std::size_t>& sizes,
                                            std::size_t per_cell) {
  std::vector<GeneratedGraph> out;
  std::size_t id = 0;
  for (RandomModel model : c.models) {
    for (std::size_t n : sizes) {
      for (std::size_t i = 0; i < per_cell; ++i, ++id) {
        RandomModelParams p;
        p.model = model;
        p.n = n;
        p.ba_m = c.ba_m;
        p.nws_k = c.nws_k;
        p.nws_p = c.nws_p;
        p.seed = child_seed(c.master_seed, id);
        out.push_back({id, p, generate(p)});
      }
    }
  }
  return out;
}

void common_metadata(ExperimentOutput& out, const ExperimentConfig& c,
                     const std::vector<std::size_t>& sizes, std::size_t per_cell) {
  out.metadata.emplace_back("tool", "netbuild");
  out.metadata.emplace_back("tool_version", std::string(kToolVersion));
  out.metadata.emplace_back("experiment", std::to_string(out.experiment));
  out.metadata.emplace_back("master_seed", std::to_string(c.master_seed));
  out.metadata.emplace_back("seed_rule", "graph i uses splitmix64(master_seed + (i+1)*0x9E3779B97F4A7C15)");
  if (!sizes.empty()) {
    std::vector<std::string> names;
    for (RandomModel m : c.models) names.emplace_back(to_string(m));
    out.metadata.emplace_back("models", join(names));
    out.metadata.emplace_back("ba_m", std::to_string(c.ba_m));
    out.metadata.emplace_back("nws_k", std::to_string(c.nws_k));
    out.metadata.emplace_back("nws_p", fixed(c.nws_p, 4));
    out.metadata.emplace_back("sizes", join(sizes));
    out.metadata.emplace_back("per_cell", std::to_string(per_cell));
  }
  out.metadata.emplace_back("timing", c.timing ? "on" : "off");
}

ExperimentRecord graph_record(int experiment, const GeneratedGraph& gg, const MetricProfile& p) {
  ExperimentRecord r;
  r.experiment = experiment;
  r.graph_id = gg.id;
  r.source = std::string(to_string(gg.params.model));
  r.params = gg.params.describe();
  r.n = gg.graph.node_count();
  r.m = gg.graph.edge_count();
  r.radius = p.radius;
  r.diameter = p.diameter;
  r.seed = gg.params.seed;
  return r;
}

std::string heuristic_list(const ExperimentConfig& c) {
  std::vector<std::string> names;
  for (auto h : c.heuristics) names.emplace_back(to_string(h));
  return join(names);
}

std::size_t heuristic_rank(const std::string& name) {
  for (std::size_t i = 0; i < kAllBrokerHeuristics.size(); ++i)
    if (to_string(kAllBrokerHeuristics[i]) == name) return i;
  return name == "periphery" ? 100 : 101;
}

// Averages detail rows per (source, n, radius, algorithm). With
// `by_radius` false the radius column is left empty and rows of all radii
// pool together.
std::vector<ExperimentRecord> summarize(int experiment, const std::vector<ExperimentRecord>& rows,
                                        bool by_radius) {
  struct Acc {
    std::size_t count = 0;
    double size_sum = 0, edges_sum = 0;
    std::size_t optimal_hits = 0, optimal_known = 0;
  };
  using Key = std::tuple<std::string, std::size_t, Hops, std::size_t, std::string>;
  std::map<Key, Acc> groups;
  for (const auto& r : rows) {
    if (r.record != "detail" || r.status != "ok") continue;
    Key k{r.source, r.n.value_or(0), by_radius ? r.radius.value_or(0) : 0,
          heuristic_rank(r.algorithm), r.algorithm};
    Acc& a = groups[k];
    ++a.count;
    if (r.output_size) a.size_sum += static_cast<double>(*r.output_size);
    if (r.edges_added) a.edges_sum += static_cast<double>(*r.edges_added);
    if (r.optimal_size && r.output_size) {
      ++a.optimal_known;
      a.optimal_hits += *r.output_size == *r.optimal_size ? 1 : 0;
    }
  }
  std::vector<ExperimentRecord> out;
  for (const auto& [k, a] : groups) {
    ExperimentRecord s;
    s.record = "summary";
    s.experiment = experiment;
    s.source = std::get<0>(k);
    if (std::get<1>(k) != 0) s.n = std::get<1>(k);
    if (by_radius) s.radius = std::get<2>(k);
    s.algorithm = std::get<4>(k);
    s.samples = a.count;
    if (experiment <= 3) s.mean_output_size = a.size_sum / static_cast<double>(a.count);
    if (experiment >= 4) s.mean_edges_added = a.edges_sum / static_cast<double>(a.count);
    if (a.optimal_known > 0) {
      s.optimality_rate =
          static_cast<double>(a.optimal_hits) / static_cast<double>(a.optimal_known);
    }
    out.push_back(std::move(s));
  }
  return out;
}

ExperimentRecord broker_row(const ExperimentRecord& base, const AlgorithmReport& rep,
                            const ExperimentConfig& c) {
  ExperimentRecord r = base;
  r.algorithm = std::string(to_string(rep.heuristic));
  r.output_size = rep.size;
  r.valid = rep.valid;
  if (c.timing) r.elapsed_ms = to_ms(rep.elapsed);
  return r;
}

ExperimentRecord delta_row(const ExperimentRecord& base, DiameterHeuristic h, Hops delta,
                           std::uint64_t seed, const DeltaReport& rep, const ExperimentConfig& c,
                           std::chrono::nanoseconds elapsed) {
  ExperimentRecord r = base;
  r.algorithm = std::string(to_string(h));
  r.delta = delta;
  r.seed = seed;
  r.edges_added = rep.edges_added;
  r.achieved_diameter = rep.achieved_diameter;
  r.valid = rep.achieved_diameter <= delta;
  if (c.timing) r.elapsed_ms = to_ms(elapsed);
  return r;
}

std::optional<LabeledGraph> load_dataset(const DatasetDescriptor& d, ExperimentOutput& out) {
  if (!std::filesystem::exists(d.path)) {
    ExperimentRecord r;
    r.record = "stats";
    r.experiment = out.experiment;
    r.source = d.name;
    r.status = "missing";
    r.note = "dataset not found: " + d.path.string();
    std::cerr << "skipping " << d.name << ": " << r.note << '\n';
    out.records.push_back(std::move(r));
    return std::nullopt;
  }
  return load_edge_list(d.path, /*giant=*/true);
}

ExperimentRecord dataset_stats_row(int experiment, const DatasetDescriptor& d,
                                   const LabeledGraph& lg, const MetricProfile& p) {
  ExperimentRecord r;
  r.record = "stats";
  r.experiment = experiment;
  r.source = d.name;
  r.n = lg.graph.node_count();
  r.m = lg.graph.edge_count();
  r.radius = p.radius;
  r.diameter = p.diameter;
  std::ostringstream note;
  note << "loaded_nodes=" << lg.loaded_nodes << ";loaded_edges=" << lg.loaded_edges
       << ";largest_component=" << lg.graph.node_count();
  r.status = "ok";
  if (d.expected) {
    const DatasetStats& e = *d.expected;
    const bool match = lg.loaded_nodes == e.nodes && lg.loaded_edges == e.edges &&
                       lg.graph.node_count() == e.largest_component && p.diameter == e.diameter &&
                       p.radius == e.radius;
    r.status = match ? "match" : "mismatch";
    note << ";expected_nodes=" << e.nodes << ";expected_edges=" << e.edges
         << ";expected_largest_component=" << e.largest_component
         << ";expected_diameter=" << e.diameter << ";expected_radius=" << e.radius;
    if (!match) std::cerr << "warning: " << d.name << " does not match its published statistics\n";
  }
  r.note = note.str();
  return r;
}

void dataset_metadata(ExperimentOutput& out, const ExperimentConfig& c) {
  std::vector<std::string> names;
  for (const auto& d : c.datasets) names.push_back(d.name);
  out.metadata.emplace_back("datasets", join(names));
}

}  // namespace

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> columns = {
      "record",       "experiment",  "graph_id",         "source",
      "params",       "n",           "m",                "radius",
      "diameter",     "algorithm",   "delta",            "seed",
      "output_size",  "optimal_size", "edges_added",     "achieved_diameter",
      "valid",        "status",      "elapsed_ms",       "samples",
      "mean_output_size", "mean_edges_added", "optimality_rate", "note"};
  return columns;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> csv_fields(const ExperimentRecord& r) {
  return {r.record,
          std::to_string(r.experiment),
          opt(r.graph_id),
          r.source,
          r.params,
          opt(r.n),
          opt(r.m),
          opt(r.radius),
          opt(r.diameter),
          r.algorithm,
          opt(r.delta),
          opt(r.seed),
          opt(r.output_size),
          opt(r.optimal_size),
          opt(r.edges_added),
          opt(r.achieved_diameter),
          opt(r.valid),
          r.status,
          r.elapsed_ms ? fixed(*r.elapsed_ms, 3) : std::string(),
          opt(r.samples),
          opt(r.mean_output_size),
          opt(r.mean_edges_added),
          opt(r.optimality_rate),
          r.note};
}

void write_csv(std::ostream& out, const ExperimentOutput& result) {
  for (const auto& [k, v] : result.metadata) out << "# " << k << '=' << v << '\n';
  const auto& cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& r : result.records) {
    const auto fields = csv_fields(r);
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_escape(fields[i]);
    out << '\n';
  }
}

std::optional<DatasetStats> known_dataset_stats(const std::string& name) {
  if (name == "facebook") return DatasetStats{4039, 88234, 4039, 8, 4};
  if (name == "enron") return DatasetStats{33969, 180811, 33696, 13, 7};
  if (name == "col1") return DatasetStats{4158, 13422, 4158, 17, 9};
  if (name == "col2") return DatasetStats{8638, 24806, 8638, 18, 10};
  return std::nullopt;
}

ExperimentOutput run_experiment_1(const ExperimentConfig& c) {
  ExperimentOutput out;
  out.experiment = 1;
  const auto sizes = sizes_or(c, {100, 200, 400});
  const std::size_t per_cell = per_cell_or(c, 30);
  common_metadata(out, c, sizes, per_cell);
  out.metadata.emplace_back("heuristics", heuristic_list(c));

  for (const auto& gg : generate_graphs(c, sizes, per_cell)) {
    const MetricProfile p = metric_profile(gg.graph);
    const ExperimentRecord base = graph_record(1, gg, p);
    for (BrokerHeuristic h : c.heuristics) {
      HeuristicOptions o;
      o.verify = c.verify;
      out.records.push_back(broker_row(base, run_heuristic(gg.graph, h, gg.params.seed, o), c));
    }
  }
  auto summary = summarize(1, out.records, /*by_radius=*/true);
  out.records.insert(out.records.end(), summary.begin(), summary.end());
  return out;
}

ExperimentOutput run_experiment_2(const ExperimentConfig& c) {
  ExperimentOutput out;
  out.experiment = 2;
  const auto sizes = sizes_or(c, {8, 10, 12, 14});
  const std::size_t per_cell = per_cell_or(c, 30);
  common_metadata(out, c, sizes, per_cell);
  out.metadata.emplace_back("heuristics", heuristic_list(c));
  out.metadata.emplace_back("oracle_limit", std::to_string(c.oracle_limit));

  for (const auto& gg : generate_graphs(c, sizes, per_cell)) {
    const MetricProfile p = metric_profile(gg.graph);
    ExperimentRecord base = graph_record(2, gg, p);
    if (gg.graph.node_count() > c.oracle_limit) {
      ExperimentRecord r = base;
      r.status = "cap_exceeded";
      r.note = "n above oracle limit";
      std::cerr << "skipping graph " << gg.id << ": n=" << gg.graph.node_count()
                << " above oracle limit " << c.oracle_limit << '\n';
      out.records.push_back(std::move(r));
      continue;
    }
    const SearchResult oracle = brute_force_min_broker(gg.graph, gg.graph.node_count());
    base.optimal_size = oracle.set.size();
    for (BrokerHeuristic h : c.heuristics) {
      HeuristicOptions o;
      o.verify = c.verify;
      out.records.push_back(broker_row(base, run_heuristic(gg.graph, h, gg.params.seed, o), c));
    }
  }
  auto by_size = summarize(2, out.records, /*by_radius=*/false);
  out.records.insert(out.records.end(), by_size.begin(), by_size.end());
  // Overall rate per (model, heuristic), pooled over sizes.
  std::vector<ExperimentRecord> pooled;
  for (auto r : out.records) {
    if (r.record != "detail") continue;
    r.n.reset();
    pooled.push_back(std::move(r));
  }
  auto overall = summarize(2, pooled, /*by_radius=*/false);
  out.records.insert(out.records.end(), overall.begin(), overall.end());
  return out;
}

ExperimentOutput run_experiment_3(const ExperimentConfig& c) {
  ExperimentOutput out;
  out.experiment = 3;
  common_metadata(out, c, {}, 0);
  dataset_metadata(out, c);
  out.metadata.emplace_back("heuristics", heuristic_list(c));
  out.metadata.emplace_back("timeout_ms", std::to_string(c.timeout.count()));

  for (std::size_t di = 0; di < c.datasets.size(); ++di) {
    const DatasetDescriptor& d = c.datasets[di];
    const auto lg = load_dataset(d, out);
    if (!lg) continue;
    const MetricProfile p = metric_profile(lg->graph);
    ExperimentRecord stats = dataset_stats_row(3, d, *lg, p);
    stats.graph_id = di;
    out.records.push_back(stats);

    ExperimentRecord base;
    base.experiment = 3;
    base.graph_id = di;
    base.source = d.name;
    base.n = lg->graph.node_count();
    base.m = lg->graph.edge_count();
    base.radius = p.radius;
    base.diameter = p.diameter;
    for (BrokerHeuristic h : c.heuristics) {
      HeuristicOptions o;
      o.verify = c.verify;
      o.deadline = Deadline::after(c.timeout);
      try {
        out.records.push_back(broker_row(base, run_heuristic(lg->graph, h, c.master_seed, o), c));
      } catch (const TimeoutError&) {
        ExperimentRecord r = base;
        r.algorithm = std::string(to_string(h));
        r.status = "timeout";
        std::cerr << d.name << ": " << to_string(h) << " timed out\n";
        out.records.push_back(std::move(r));
      }
    }
  }
  return out;
}

ExperimentOutput run_experiment_4(const ExperimentConfig& c) {
  ExperimentOutput out;
  out.experiment = 4;
  const auto sizes = sizes_or(c, {100, 200, 400});
  const std::size_t per_cell = per_cell_or(c, 30);
  common_metadata(out, c, sizes, per_cell);
  out.metadata.emplace_back("delta_rule", "diameter-1");

  for (const auto& gg : generate_graphs(c, sizes, per_cell)) {
    const MetricProfile p = metric_profile(gg.graph);
    const ExperimentRecord base = graph_record(4, gg, p);
    for (DiameterHeuristic h : {DiameterHeuristic::kPeriphery, DiameterHeuristic::kCenterPeriphery}) {
      const std::uint64_t seed = child_seed(gg.params.seed, static_cast<std::uint64_t>(h));
      if (p.diameter < 3) {
        ExperimentRecord r = base;
        r.algorithm = std::string(to_string(h));
        r.status = "skipped";
        r.note = "diameter below 3";
        out.records.push_back(std::move(r));
        continue;
      }
      const Hops delta = p.diameter - 1;
      const auto start = std::chrono::steady_clock::now();
      const DeltaReport rep = run_diameter_heuristic(gg.graph, h, delta, seed);
      out.records.push_back(
          delta_row(base, h, delta, seed, rep, c, std::chrono::steady_clock::now() - start));
    }
  }
  auto summary = summarize(4, out.records, /*by_radius=*/true);
  out.records.insert(out.records.end(), summary.begin(), summary.end());
  return out;
}

ExperimentOutput run_experiment_5(const ExperimentConfig& c) {
  ExperimentOutput out;
  out.experiment = 5;
  common_metadata(out, c, {}, 0);
  dataset_metadata(out, c);
  out.metadata.emplace_back("delta_rule", "diameter-i for 1<=i<=" + std::to_string(c.max_reduction));
  out.metadata.emplace_back("timeout_ms", std::to_string(c.timeout.count()));

  for (std::size_t di = 0; di < c.datasets.size(); ++di) {
    const DatasetDescriptor& d = c.datasets[di];
    const auto lg = load_dataset(d, out);
    if (!lg) continue;
    const MetricProfile p = metric_profile(lg->graph);
    ExperimentRecord stats = dataset_stats_row(5, d, *lg, p);
    stats.graph_id = di;
    out.records.push_back(stats);

    ExperimentRecord base;
    base.experiment = 5;
    base.graph_id = di;
    base.source = d.name;
    base.n = lg->graph.node_count();
    base.m = lg->graph.edge_count();
    base.radius = p.radius;
    base.diameter = p.diameter;
    for (Hops i = 1; i <= c.max_reduction; ++i) {
      for (DiameterHeuristic h :
           {DiameterHeuristic::kPeriphery, DiameterHeuristic::kCenterPeriphery}) {
        const std::uint64_t seed = child_seed(c.master_seed, di * 16 + i * 2 + static_cast<int>(h));
        if (p.diameter < i + 2) {
          ExperimentRecord r = base;
          r.algorithm = std::string(to_string(h));
          r.status = "skipped";
          r.note = "delta would fall below 2";
          out.records.push_back(std::move(r));
          continue;
        }
        const Hops delta = p.diameter - i;
        DeltaOptions o;
        o.deadline = Deadline::after(c.timeout);
        const auto start = std::chrono::steady_clock::now();
        try {
          const DeltaReport rep = run_diameter_heuristic(lg->graph, h, delta, seed, o);
          out.records.push_back(
              delta_row(base, h, delta, seed, rep, c, std::chrono::steady_clock::now() - start));
        } catch (const TimeoutError&) {
          ExperimentRecord r = base;
          r.algorithm = std::string(to_string(h));
          r.delta = delta;
          r.seed = seed;
          r.status = "timeout";
          out.records.push_back(std::move(r));
        }
      }
    }
  }
  return out;
}

ExperimentOutput run_experiment(int id, const ExperimentConfig& config) {
  switch (id) {
    case 1: return run_experiment_1(config);
    case 2: return run_experiment_2(config);
    case 3: return run_experiment_3(config);
    case 4: return run_experiment_4(config);
    case 5: return run_experiment_5(config);
    default: throw InputError("experiment id must be 1..5");
  }
}

}  // namespace netbuild
