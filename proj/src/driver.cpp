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

#include "hxsim/driver.hpp"

#include <optional>

namespace hxsim {

RunSummary summarize(std::span<const IterationMetrics> rows, std::uint64_t edge_volume_bytes) {
  RunSummary s;
  s.iterations = rows.size();
  s.edge_volume_bytes = edge_volume_bytes;
  for (const auto& r : rows) {
    s.bytes_filter += r.bytes_filter;
    s.bytes_compaction += r.bytes_compaction_payload;
    s.bytes_zerocopy += r.bytes_zerocopy_lines;
    s.tlps += r.tlps_total;
    s.cpu_compact_time += r.cpu_compact_time;
    s.total_makespan += r.makespan;
  }
  s.total_bytes = s.bytes_filter + s.bytes_compaction + s.bytes_zerocopy;
  s.transfer_ratio = edge_volume_bytes == 0 ? 0.0
                                            : static_cast<double>(s.total_bytes) /
                                                  static_cast<double>(edge_volume_bytes);
  return s;
}

RunReport run_algorithm(const CsrGraph& input, const PartitionTable& table, const RunOptions& options) {
  RunReport report;
  report.options = options;
  RunOptions& opts = report.options;
  opts.on_plan = nullptr;
  opts.on_iteration = nullptr;

  if (table.size() > 0 && table.ranges.back().end != input.num_vertices())
    throw ConsistencyError("partition table does not cover the graph");

  if (input.num_vertices() == 0) {
    if (opts.algorithm == Algorithm::PageRank)
      report.result = std::vector<double>{};
    else
      report.result = std::vector<std::uint64_t>{};
    report.summary = summarize({}, 0);
    report.summary.converged = true;
    return report;
  }

  const bool wants_weights = opts.algorithm == Algorithm::Sssp;
  std::optional<CsrGraph> weighted;
  if (wants_weights && !input.weighted()) weighted = synthesize_weights(input);
  const CsrGraph& g = weighted ? *weighted : input;

  if (opts.derive_d1) opts.cost.d1 = static_cast<std::uint32_t>(g.edge_entry_bytes(wants_weights));
  opts.cost.validate();

  auto program = make_program(opts.algorithm, g, opts.params);
  opts.policy.validate(*program);

  std::vector<double> hubs;
  if (opts.policy.mode == PriorityMode::HubDriven) hubs = hub_scores(compute_degree_stats(g));

  FrontierState frontier(g.num_vertices());
  program->initialize(frontier.active);

  while (!frontier.empty() && frontier.iteration < opts.max_iterations) {
    const auto activity = compute_activity(g, table, frontier, opts.cost);
    const auto choices = select_engines(activity, opts.cost, opts.engine);
    TransferPlan plan = build_plan(choices, activity, table, opts.cost);
    prioritize(plan, table, frontier, opts.policy, hubs, *program);
    if (options.on_plan) options.on_plan(frontier.iteration, plan);

    IterationResult res = run_iteration(g, table, plan, frontier, *program, opts.policy, opts.cost, opts.streams);
    if (options.on_iteration) options.on_iteration(res);
    report.iterations.push_back(res.metrics);
    frontier = std::move(res.next);
  }

  report.result = program->result();
  report.summary = summarize(report.iterations, g.num_edges() * opts.cost.d1);
  report.summary.converged = frontier.empty();
  return report;
}

}  // namespace hxsim
