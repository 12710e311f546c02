/*
Copyright (c) 2026 The hxsim Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// hxsim command line: preprocess, run, rmat and report.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "hxsim/config.hpp"
#include "hxsim/driver.hpp"
#include "hxsim/partition.hpp"
#include "hxsim/report.hpp"
#include "hxsim/rmat.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

using namespace hxsim;

struct GlobalOptions {
  std::string config;
  std::uint64_t seed = 1;
  std::string metrics_out;
};

struct PreprocessOptions {
  std::string input;
  std::string out;
  bool undirected = false;
  bool weighted = false;
  bool synthesize = false;
  int id_bytes = 4;
  double hub_fraction = kDefaultHubFraction;
  std::uint64_t partition_bytes = kDefaultPartitionBytes;
};

struct RunCliOptions {
  std::string graph;
  bool undirected = false;
  bool weighted = false;
  std::string algo = "sssp";
  std::uint64_t source = 0;
  std::string engine = "hybrid";
  std::string priority = "none";
  std::string delta_agg = "sum";
  bool no_recompute = false;
  std::size_t streams = 4;
  double damping = 0.85;
  double epsilon = 1e-9;
  std::size_t max_iters = 10000;
  double hub_fraction = kDefaultHubFraction;
  std::uint64_t partition_bytes = kDefaultPartitionBytes;
  std::string summary_out;
  std::string dump_plan;
  std::string result_out;
  std::string result_text;
  CostModelConfig cost;
};

struct RmatCliOptions {
  RmatParams params;
  std::string out;
  bool weighted = false;
};

void write_graph_bundle(const CsrGraph& g, const std::filesystem::path& out,
                        std::span<const std::uint64_t> original_ids, std::span<const VertexId> permutation,
                        const PartitionTable& table) {
  write_binary_csr(g, out);
  write_u64_array(original_ids, out.string() + ".idmap");
  write_u64_array(permutation, out.string() + ".perm");
  write_u64_array(partition_boundaries(table), out.string() + ".parts");
}

int do_preprocess(const PreprocessOptions& o) {
  LoadOptions lo;
  lo.directed = !o.undirected;
  lo.weighted = o.weighted;
  lo.width = o.id_bytes == 8 ? IdWidth::k64 : IdWidth::k32;
  IngestedGraph in = load_edge_list(o.input, lo);
  CsrGraph g = std::move(in.graph);
  if (o.synthesize && !g.weighted()) g = synthesize_weights(g);

  const DegreeStats stats = compute_degree_stats(g);
  HubSortResult sorted = hub_sort(g, stats, o.hub_fraction);
  std::vector<std::uint64_t> ids(in.original_ids.size());
  for (VertexId v = 0; v < ids.size(); ++v) ids[sorted.permutation[v]] = in.original_ids[v];
  const PartitionTable table = partition_chunked(sorted.graph, o.partition_bytes);
  write_graph_bundle(sorted.graph, o.out, ids, sorted.permutation, table);

  std::cout << "vertices " << sorted.graph.num_vertices() << " edges " << sorted.graph.num_edges()
            << " hubs " << sorted.hubs << " partitions " << table.size() << "\n";
  return kExitOk;
}

int do_run(RunCliOptions o, const GlobalOptions& global, const CLI::App& cmd, ConfigMap config) {
  auto given = [&](const char* flag) { return cmd.get_option(flag)->count() > 0; };

  // Config values fill in whatever the command line left unset.
  apply_cost_config(config, o.cost);
  auto take = [&](const char* key, const char* flag, auto&& apply) {
    if (auto it = config.find(key); it != config.end()) {
      if (!given(flag)) apply(it->second);
      config.erase(it);
    }
  };
  take("streams", "--streams", [&](const std::string& v) { o.streams = config_u64("streams", v); });
  take("max_iters", "--max-iters", [&](const std::string& v) { o.max_iters = config_u64("max_iters", v); });
  take("damping", "--damping", [&](const std::string& v) { o.damping = config_double("damping", v); });
  take("epsilon", "--epsilon", [&](const std::string& v) { o.epsilon = config_double("epsilon", v); });
  take("hub_fraction", "--hub-fraction", [&](const std::string& v) { o.hub_fraction = config_double("hub_fraction", v); });
  take("partition_bytes", "--partition-bytes",
       [&](const std::string& v) { o.partition_bytes = config_u64("partition_bytes", v); });
  take("engine", "--engine", [&](const std::string& v) { o.engine = v; });
  take("priority", "--priority", [&](const std::string& v) { o.priority = v; });
  take("delta_agg", "--delta-agg", [&](const std::string& v) { o.delta_agg = v; });
  if (!config.empty()) throw ConfigError("unknown config key '" + config.begin()->first + "'");

  RunOptions ro;
  ro.algorithm = parse_algorithm(o.algo);
  ro.params.source = o.source;
  ro.params.damping = o.damping;
  ro.params.epsilon = o.epsilon;
  ro.engine = parse_engine_mode(o.engine);
  ro.policy.mode = parse_priority_mode(o.priority);
  ro.policy.delta_agg = parse_delta_aggregate(o.delta_agg);
  ro.policy.recompute = !o.no_recompute;
  ro.streams = o.streams;
  ro.max_iterations = o.max_iters;
  ro.cost = o.cost;
  ro.derive_d1 = !given("--d1");

  CsrGraph g;
  std::optional<PartitionTable> table;
  if (is_binary_csr(o.graph)) {
    g = read_binary_csr(o.graph);
    const std::filesystem::path parts = o.graph + ".parts";
    if (!given("--partition-bytes") && std::filesystem::exists(parts))
      table = partition_from_boundaries(g, read_u64_array(parts), o.partition_bytes);
  } else {
    LoadOptions lo;
    lo.directed = !o.undirected;
    lo.weighted = o.weighted;
    IngestedGraph in = load_edge_list(o.graph, lo);
    CsrGraph base = in.graph;
    if (ro.algorithm == Algorithm::Sssp && !base.weighted()) base = synthesize_weights(base);
    g = hub_sort(base, compute_degree_stats(base), o.hub_fraction).graph;
  }
  if (!table) table = partition_chunked(g, o.partition_bytes);

  std::ofstream plan_out;
  if (!o.dump_plan.empty()) {
    plan_out.open(o.dump_plan);
    if (!plan_out) throw Error("cannot write " + o.dump_plan);
    ro.on_plan = [&](std::size_t it, const TransferPlan& plan) { plan_out << plan_to_json(it, plan).dump() << '\n'; };
  }

  const RunReport report = run_algorithm(g, *table, ro);

  if (!global.metrics_out.empty()) {
    std::ofstream csv(global.metrics_out);
    if (!csv) throw Error("cannot write " + global.metrics_out);
    write_metrics_csv(csv, report.iterations);
  } else {
    write_metrics_csv(std::cout, report.iterations);
  }
  std::string summary_path = o.summary_out;
  if (summary_path.empty() && !global.metrics_out.empty()) summary_path = global.metrics_out + ".summary.json";
  const auto summary = summary_to_json(report);
  if (!summary_path.empty()) {
    std::ofstream js(summary_path);
    if (!js) throw Error("cannot write " + summary_path);
    js << summary.dump(2) << '\n';
  }
  if (!o.result_out.empty()) write_result_binary(report.result, o.result_out);
  if (!o.result_text.empty()) {
    std::ofstream txt(o.result_text);
    if (!txt) throw Error("cannot write " + o.result_text);
    write_result_text(txt, report.result);
  }
  std::cerr << "iterations " << report.summary.iterations << " converged " << report.summary.converged
            << " transfer_ratio " << format_double(report.summary.transfer_ratio) << " makespan "
            << format_double(report.summary.total_makespan) << "\n";
  return kExitOk;
}

int do_rmat(RmatCliOptions o, const GlobalOptions& global) {
  o.params.seed = global.seed;
  auto edges = rmat_generate(o.params);
  if (o.weighted) {
    for (auto& e : edges) e.weight = synthesized_weight(e.src, e.dst);
  }
  if (o.out.empty() || o.out == "-") {
    write_edge_list(std::cout, edges, o.weighted);
  } else {
    std::ofstream out(o.out);
    if (!out) throw Error("cannot write " + o.out);
    write_edge_list(out, edges, o.weighted);
  }
  return kExitOk;
}

int do_report(const std::vector<std::string>& csvs) {
  std::vector<ComparedRun> runs;
  for (const auto& path : csvs) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    const auto rows = read_metrics_csv(in);
    std::optional<nlohmann::json> summary;
    if (std::ifstream js(path + ".summary.json"); js) {
      try {
        summary = nlohmann::json::parse(js);
      } catch (const nlohmann::json::exception& e) {
        throw FormatError(path + ".summary.json: " + e.what());
      }
    }
    runs.push_back(compare_entry(std::filesystem::path(path).filename().string(), rows, summary));
  }
  std::cout << format_comparison(runs);
  return kExitOk;
}

void add_cost_flags(CLI::App& cmd, CostModelConfig& c) {
  cmd.add_option("--d1", c.d1, "bytes per edge entry (default: derived from the graph)");
  cmd.add_option("--d2", c.d2, "bytes per compacted index entry");
  cmd.add_option("--m", c.m, "bytes per memory request");
  cmd.add_option("--mr", c.mr, "outstanding requests per TLP");
  cmd.add_option("--rtt", c.rtt, "abstract time per saturated TLP");
  cmd.add_option("--gamma", c.gamma, "zero-copy RTT damping factor");
  cmd.add_option("--alpha", c.alpha, "compaction-vs-filter threshold");
  cmd.add_option("--beta", c.beta, "compaction-vs-zero-copy threshold");
  cmd.add_option("--k", c.k, "filter partitions per task unit");
  cmd.add_option("--compaction-throughput", c.compaction_throughput, "compaction bytes per rtt");
  cmd.add_option("--kernel-throughput", c.kernel_throughput, "kernel edges per rtt");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid host-device transfer simulator for out-of-core graph processing"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--config", global.config, "key = value config file");
  app.add_option("--seed", global.seed, "seed for all randomness");
  app.add_option("--metrics-out", global.metrics_out, "per-iteration metrics CSV");

  PreprocessOptions pre;
  auto* pre_cmd = app.add_subcommand("preprocess", "ingest an edge list, hub-sort and partition it");
  pre_cmd->add_option("--input", pre.input, "edge list")->required();
  pre_cmd->add_option("--out", pre.out, "binary CSR output path")->required();
  pre_cmd->add_flag("--undirected", pre.undirected, "store every edge in both directions");
  pre_cmd->add_flag("--weighted", pre.weighted, "third column holds edge weights");
  pre_cmd->add_flag("--synthesize-weights", pre.synthesize, "attach (src+dst) mod 64 + 1 weights");
  pre_cmd->add_option("--id-bytes", pre.id_bytes, "vertex id width")->check(CLI::IsMember({4, 8}));
  pre_cmd->add_option("--hub-fraction", pre.hub_fraction, "fraction of vertices gathered as hubs")
      ->check(CLI::Range(0.0, 1.0));
  pre_cmd->add_option("--partition-bytes", pre.partition_bytes, "partition size in bytes")
      ->check(CLI::PositiveNumber);

  RunCliOptions run;
  auto* run_cmd = app.add_subcommand("run", "run an algorithm on the simulated platform");
  run_cmd->add_option("--graph", run.graph, "binary CSR or edge list")->required();
  run_cmd->add_flag("--undirected", run.undirected, "edge-list input: symmetrize");
  run_cmd->add_flag("--weighted", run.weighted, "edge-list input: weights in column 3");
  run_cmd->add_option("--algo", run.algo, "sssp | bfs | cc | pr");
  run_cmd->add_option("--source", run.source, "source vertex for sssp/bfs");
  run_cmd->add_option("--engine", run.engine, "hybrid | filter | compaction | zerocopy");
  run_cmd->add_option("--priority", run.priority, "none | hub | delta");
  run_cmd->add_option("--delta-agg", run.delta_agg, "sum | max");
  run_cmd->add_flag("--no-recompute", run.no_recompute, "skip the second pass over loaded filter units");
  run_cmd->add_option("--streams", run.streams, "simulated streams")->check(CLI::PositiveNumber);
  run_cmd->add_option("--damping", run.damping, "PageRank damping");
  run_cmd->add_option("--epsilon", run.epsilon, "PageRank residual threshold");
  run_cmd->add_option("--max-iters", run.max_iters, "iteration cap");
  run_cmd->add_option("--hub-fraction", run.hub_fraction, "edge-list input: hub fraction");
  run_cmd->add_option("--partition-bytes", run.partition_bytes, "partition size in bytes")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--summary-out", run.summary_out, "JSON summary path");
  run_cmd->add_option("--dump-plan", run.dump_plan, "per-iteration transfer plans as JSON lines");
  run_cmd->add_option("--result-out", run.result_out, "binary result array");
  run_cmd->add_option("--result-text", run.result_text, "text result array");
  add_cost_flags(*run_cmd, run.cost);

  RmatCliOptions rmat;
  auto* rmat_cmd = app.add_subcommand("rmat", "generate an RMAT edge list");
  rmat_cmd->add_option("--vertices", rmat.params.num_vertices, "vertex count")->required();
  rmat_cmd->add_option("--edges", rmat.params.num_edges, "edge count")->required();
  rmat_cmd->add_option("--a", rmat.params.a);
  rmat_cmd->add_option("--b", rmat.params.b);
  rmat_cmd->add_option("--c", rmat.params.c);
  rmat_cmd->add_option("--d", rmat.params.d);
  rmat_cmd->add_flag("--weighted", rmat.weighted, "emit synthesized weights");
  rmat_cmd->add_option("--out", rmat.out, "output path ('-' for stdout)");

  std::vector<std::string> csvs;
  auto* report_cmd = app.add_subcommand("report", "compare metrics CSVs side by side");
  report_cmd->add_option("csv", csvs, "metrics CSV files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    ConfigMap config;
    if (!global.config.empty()) config = load_config(global.config);
    if (*pre_cmd) return do_preprocess(pre);
    if (*run_cmd) return do_run(run, global, *run_cmd, std::move(config));
    if (*rmat_cmd) return do_rmat(rmat, global);
    if (*report_cmd) return do_report(csvs);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
