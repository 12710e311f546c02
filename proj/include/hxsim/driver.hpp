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

#ifndef HXSIM_DRIVER_HPP
#define HXSIM_DRIVER_HPP

#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "hxsim/exec_sim.hpp"

namespace hxsim {

struct RunOptions {
  Algorithm algorithm = Algorithm::Sssp;
  AlgorithmParams params;
  EngineMode engine = EngineMode::Hybrid;
  PriorityPolicy policy;
  CostModelConfig cost;
  /// Replace cost.d1 with the graph's entry size (id bytes, plus weight bytes
  /// when the algorithm reads weights).
  bool derive_d1 = true;
  std::size_t streams = 4;
  std::size_t max_iterations = 10000;

  std::function<void(std::size_t iteration, const TransferPlan&)> on_plan;
  std::function<void(const IterationResult&)> on_iteration;
};

struct RunSummary {
  std::size_t iterations = 0;
  bool converged = false;
  std::uint64_t bytes_filter = 0;
  std::uint64_t bytes_compaction = 0;
  std::uint64_t bytes_zerocopy = 0;
  std::uint64_t total_bytes = 0;
  std::uint64_t tlps = 0;
  std::uint64_t edge_volume_bytes = 0;  // num_edges * d1
  double transfer_ratio = 0;            // total_bytes / edge_volume_bytes
  double cpu_compact_time = 0;
  double total_makespan = 0;
};

struct RunReport {
  RunOptions options;  // as effective for the run (d1 resolved)
  std::vector<IterationMetrics> iterations;
  ResultArray result;
  RunSummary summary;
};

RunSummary summarize(std::span<const IterationMetrics> rows, std::uint64_t edge_volume_bytes);

/// Iterates compute_activity -> select_engines -> build_plan -> prioritize ->
/// run_iteration until the frontier empties or max_iterations is reached.
/// SSSP on an unweighted graph runs on synthesized weights.
RunReport run_algorithm(const CsrGraph& g, const PartitionTable& table, const RunOptions& options);

}  // namespace hxsim

#endif  // HXSIM_DRIVER_HPP
