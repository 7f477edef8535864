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

// netbuild: command line front end.
//
// Exit codes: 0 success, 1 input error, 2 precondition violation,
// 3 timeout or search cap reached.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "netbuild/broker.hpp"
#include "netbuild/diameter.hpp"
#include "netbuild/error.hpp"
#include "netbuild/experiments.hpp"
#include "netbuild/generators.hpp"
#include "netbuild/io.hpp"
#include "netbuild/metrics.hpp"

namespace {

using namespace netbuild;

constexpr int kExitInput = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitLimit = 3;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

LabeledGraph load_connected(const std::string& path, bool giant) {
  LabeledGraph lg = load_edge_list(path, giant);
  if (!is_connected(lg.graph)) {
    throw PreconditionError("graph not connected (use --giant to keep the largest component)");
  }
  return lg;
}

void print_set(std::ostream& out, const char* key, const NodeSet& s,
               const std::vector<Label>& labels) {
  out << key << ':';
  for (NodeId v : s) out << ' ' << labels[v];
  out << '\n';
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  return out;
}

// --- stats -----------------------------------------------------------------

struct StatsArgs {
  std::string path;
  bool giant = false;
};

void run_stats(const StatsArgs& a) {
  const LabeledGraph lg = load_edge_list(a.path, a.giant);
  const Graph& g = lg.graph;
  std::cout << "nodes: " << g.node_count() << '\n'
            << "edges: " << g.edge_count() << '\n'
            << "loaded_nodes: " << lg.loaded_nodes << '\n'
            << "loaded_edges: " << lg.loaded_edges << '\n';
  const bool connected = is_connected(g);
  std::cout << "connected: " << (connected ? "yes" : "no") << '\n';
  if (!connected) {
    std::cout << "largest_component: " << largest_connected_component(g).graph.node_count()
              << '\n';
    throw PreconditionError("metrics need a connected graph (use --giant)");
  }
  const MetricProfile p = metric_profile(g);
  std::cout << "radius: " << p.radius << '\n'
            << "diameter: " << p.diameter << '\n'
            << "center_size: " << p.center.size() << '\n'
            << "periphery_size: " << p.periphery.size() << '\n'
            << "diametrically_uniform: " << (p.radius == p.diameter ? "yes" : "no") << '\n'
            << "complete: " << (is_complete(g) ? "yes" : "no") << '\n';
}

// --- broker ----------------------------------------------------------------

struct BrokerArgs {
  std::string path;
  std::string alg;
  std::uint64_t seed = 0;
  bool verify = false;
  bool giant = false;
};

void run_broker(const BrokerArgs& a) {
  const auto h = parse_broker_heuristic(a.alg);
  if (!h) throw InputError("unknown broker heuristic '" + a.alg + "'");
  const LabeledGraph lg = load_connected(a.path, a.giant);
  HeuristicOptions o;
  o.verify = a.verify;
  const AlgorithmReport rep = run_heuristic(lg.graph, *h, a.seed, o);
  std::cout << "algorithm: " << to_string(rep.heuristic) << '\n'
            << "size: " << rep.size << '\n'
            << "valid: " << (rep.valid ? "true" : "false") << '\n'
            << "check: " << (a.verify ? "broker-set" : "sub-radius-dominating") << '\n';
  print_set(std::cout, "set", rep.s, lg.labels);
}

// --- diam ------------------------------------------------------------------

struct DiamArgs {
  std::string path;
  Hops delta = 0;
  std::string alg;
  std::uint64_t seed = 0;
  bool giant = false;
};

void run_diam(const DiamArgs& a) {
  const auto h = parse_diameter_heuristic(a.alg);
  if (!h) throw InputError("unknown diameter heuristic '" + a.alg + "'");
  const LabeledGraph lg = load_connected(a.path, a.giant);
  const DeltaReport rep = run_diameter_heuristic(lg.graph, *h, a.delta, a.seed);
  std::cout << "algorithm: " << to_string(*h) << '\n'
            << "seed: " << a.seed << '\n'
            << "delta: " << a.delta << '\n'
            << "edges_added: " << rep.edges_added << '\n'
            << "achieved_diameter: " << rep.achieved_diameter << '\n'
            << "iterations: " << rep.iterations << '\n';
  std::cout << "picks:";
  for (NodeId v : rep.picks) std::cout << ' ' << lg.labels[v];
  std::cout << "\ndiameter_trace:";
  for (Hops d : rep.diameter_trace) std::cout << ' ' << d;
  std::cout << '\n';
  print_set(std::cout, "set", rep.s, lg.labels);
}

// --- gen -------------------------------------------------------------------

struct GenArgs {
  std::string model;
  RandomModelParams params;
  std::string out;
};

void run_gen(GenArgs a) {
  const auto model = parse_random_model(a.model);
  if (!model) throw InputError("unknown model '" + a.model + "'");
  a.params.model = *model;
  const Graph g = generate(a.params);
  auto out = open_out(a.out);
  write_edge_list(out, g,
                  {"netbuild " + std::string(kToolVersion) + " gen " + a.params.describe(),
                   "seed=" + std::to_string(a.params.seed),
                   "nodes=" + std::to_string(g.node_count()) +
                       " edges=" + std::to_string(g.edge_count())});
}

// --- gadget ----------------------------------------------------------------

struct GadgetArgs {
  std::string path;
  std::string out;
};

void run_gadget(const GadgetArgs& a) {
  const LabeledGraph lg = load_connected(a.path, false);
  const Gadget gadget = reduction_gadget(lg.graph);
  std::vector<std::string> comments = {
      "netbuild " + std::string(kToolVersion) + " gadget",
      "nodes=" + std::to_string(gadget.h.node_count()) +
          " edges=" + std::to_string(gadget.h.edge_count()),
      "layout: label -> layer1 layer2 layer3"};
  for (NodeId v = 0; v < lg.graph.node_count(); ++v) {
    comments.push_back(std::to_string(lg.labels[v]) + " -> " +
                       std::to_string(gadget.map.id(v, 1)) + " " +
                       std::to_string(gadget.map.id(v, 2)) + " " +
                       std::to_string(gadget.map.id(v, 3)));
  }
  auto out = open_out(a.out);
  write_edge_list(out, gadget.h, comments);
}

// --- oracle ----------------------------------------------------------------

struct OracleArgs {
  std::string path;
  std::string target;
  std::optional<Hops> delta;
  std::optional<std::size_t> cap;
};

void run_oracle(const OracleArgs& a) {
  const LabeledGraph lg = load_connected(a.path, false);
  const Graph& g = lg.graph;
  const std::size_t cap = a.cap.value_or(g.node_count());
  SearchResult result;
  if (a.target == "broker") {
    result = brute_force_min_broker(g, cap);
  } else if (a.target == "dom") {
    result = {SearchStatus::kFound, brute_force_min_dominating(g)};
    if (result.set.size() > cap) result = {};
  } else if (a.target == "delta") {
    if (!a.delta) throw InputError("--delta is required for --target delta");
    result = brute_force_min_delta_enabling(g, *a.delta, cap);
  } else {
    throw InputError("unknown oracle target '" + a.target + "'");
  }
  std::cout << "target: " << a.target << '\n';
  if (!result.found()) throw CapExceeded("no solution within size cap " + std::to_string(cap));
  std::cout << "size: " << result.set.size() << '\n';
  print_set(std::cout, "set", result.set, lg.labels);
}

// --- experiment --------------------------------------------------------------

struct ExperimentArgs {
  int id = 0;
  ExperimentConfig config;
  std::vector<std::string> models;
  std::vector<std::string> algs;
  std::vector<std::string> datasets;
  double timeout_sec = 600;
  bool check_stats = false;
  bool no_verify = false;
  std::string out;
};

void run_experiment_cmd(ExperimentArgs a) {
  ExperimentConfig& c = a.config;
  if (!a.models.empty()) {
    c.models.clear();
    for (const auto& m : a.models) {
      const auto model = parse_random_model(m);
      if (!model) throw InputError("unknown model '" + m + "'");
      c.models.push_back(*model);
    }
  }
  if (!a.algs.empty()) {
    c.heuristics.clear();
    for (const auto& name : a.algs) {
      const auto h = parse_broker_heuristic(name);
      if (!h) throw InputError("unknown broker heuristic '" + name + "'");
      c.heuristics.push_back(*h);
    }
  }
  for (const auto& arg : a.datasets) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos) throw InputError("--dataset expects name=path, got '" + arg + "'");
    DatasetDescriptor d{arg.substr(0, eq), arg.substr(eq + 1), std::nullopt};
    if (a.check_stats) d.expected = known_dataset_stats(d.name);
    c.datasets.push_back(std::move(d));
  }
  c.timeout = std::chrono::milliseconds(static_cast<std::int64_t>(a.timeout_sec * 1000));
  c.verify = !a.no_verify;
  const ExperimentOutput result = run_experiment(a.id, c);
  auto out = open_out(a.out);
  write_csv(out, result);
  std::cerr << "wrote " << result.records.size() << " records to " << a.out << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"netbuild: broker sets and diameter-bounding ties for a newcomer node"};
  app.require_subcommand(1);

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Print size, radius, diameter of an edge list");
  stats_cmd->add_option("path", stats.path, "Edge list")->required();
  stats_cmd->add_flag("--giant", stats.giant, "Keep only the largest connected component");

  BrokerArgs broker;
  auto* broker_cmd = app.add_subcommand("broker", "Run a broker-set heuristic");
  broker_cmd->add_option("path", broker.path, "Edge list")->required();
  broker_cmd->add_option("--alg", broker.alg, "max|btw|ml|s-max|s-btw|s-ml|center|imp-center")
      ->required();
  broker_cmd->add_option("--seed", broker.seed, "Seed");
  broker_cmd->add_flag("--verify", broker.verify, "Check the output with the full broker test");
  broker_cmd->add_flag("--giant", broker.giant, "Keep only the largest connected component");

  DiamArgs diam;
  auto* diam_cmd = app.add_subcommand("diam", "Reduce the diameter to at most delta");
  diam_cmd->add_option("path", diam.path, "Edge list")->required();
  diam_cmd->add_option("--delta", diam.delta, "Target diameter")->required();
  diam_cmd->add_option("--alg", diam.alg, "periphery|cp")->required();
  diam_cmd->add_option("--seed", diam.seed, "Seed")->required();
  diam_cmd->add_flag("--giant", diam.giant, "Keep only the largest connected component");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random graph");
  gen_cmd->add_option("--model", gen.model, "ba|nws")->required();
  gen_cmd->add_option("--n", gen.params.n, "Node count")->required();
  gen_cmd->add_option("--ba-m", gen.params.ba_m, "BA edges per new node");
  gen_cmd->add_option("--nws-k", gen.params.nws_k, "NWS ring degree (even)");
  gen_cmd->add_option("--nws-p", gen.params.nws_p, "NWS shortcut probability");
  gen_cmd->add_option("--seed", gen.params.seed, "Seed")->required();
  gen_cmd->add_option("--out", gen.out, "Output edge list")->required();

  GadgetArgs gadget;
  auto* gadget_cmd = app.add_subcommand("gadget", "Build the domination-to-broker reduction graph");
  gadget_cmd->add_option("path", gadget.path, "Edge list")->required();
  gadget_cmd->add_option("--out", gadget.out, "Output edge list")->required();

  ExperimentArgs exp;
  auto* exp_cmd = app.add_subcommand("experiment", "Run experiment 1-5 and write CSV");
  exp_cmd->add_option("id", exp.id, "Experiment number")->required()->check(CLI::Range(1, 5));
  exp_cmd->add_option("--seed", exp.config.master_seed, "Master seed");
  exp_cmd->add_option("--models", exp.models, "ba,nws")->delimiter(',');
  exp_cmd->add_option("--sizes", exp.config.sizes, "Node counts")->delimiter(',');
  exp_cmd->add_option("--per-cell", exp.config.per_cell, "Graphs per (model, size)");
  exp_cmd->add_option("--alg", exp.algs, "Broker heuristics")->delimiter(',');
  exp_cmd->add_option("--ba-m", exp.config.ba_m, "BA edges per new node");
  exp_cmd->add_option("--nws-k", exp.config.nws_k, "NWS ring degree");
  exp_cmd->add_option("--nws-p", exp.config.nws_p, "NWS shortcut probability");
  exp_cmd->add_option("--oracle-limit", exp.config.oracle_limit, "Largest n for the oracle");
  exp_cmd->add_option("--timeout-sec", exp.timeout_sec, "Per-run budget for dataset runs");
  exp_cmd->add_option("--dataset", exp.datasets, "name=path (repeatable)");
  exp_cmd->add_flag("--check-stats", exp.check_stats, "Compare datasets to published stats");
  exp_cmd->add_option("--max-reduction", exp.config.max_reduction, "Experiment 5: largest i");
  exp_cmd->add_flag("--no-verify", exp.no_verify, "Skip the full broker-set check");
  exp_cmd->add_flag("--timing", exp.config.timing, "Record wall time (output not reproducible)");
  exp_cmd->add_option("--out", exp.out, "Output CSV")->required();

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive minimum for small graphs");
  oracle_cmd->add_option("path", oracle.path, "Edge list")->required();
  oracle_cmd->add_option("--target", oracle.target, "broker|dom|delta")->required();
  oracle_cmd->add_option("--delta", oracle.delta, "Target diameter for --target delta");
  oracle_cmd->add_option("--cap", oracle.cap, "Largest set size to try");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*stats_cmd) run_stats(stats);
    if (*broker_cmd) run_broker(broker);
    if (*diam_cmd) run_diam(diam);
    if (*gen_cmd) run_gen(gen);
    if (*gadget_cmd) run_gadget(gadget);
    if (*exp_cmd) run_experiment_cmd(exp);
    if (*oracle_cmd) run_oracle(oracle);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const TimeoutError& e) {
    std::cerr << "timeout: " << e.what() << '\n';
    return kExitLimit;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
