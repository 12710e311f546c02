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

#ifndef HXSIM_EXEC_SIM_HPP
#define HXSIM_EXEC_SIM_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hxsim/algorithms.hpp"
#include "hxsim/scheduler.hpp"
#include "hxsim/task_generator.hpp"

namespace hxsim {

enum class Resource : std::uint8_t { Pcie = 1, Gpu = 2, Cpu = 4 };
using ResourceSet = std::uint8_t;

inline constexpr ResourceSet resource_bit(Resource r) { return static_cast<ResourceSet>(r); }

enum class StageKind : std::uint8_t { Compact, Transfer, Kernel, Recompute, ZeroCopyFused };

std::string_view to_string(StageKind k);

struct StageSpec {
  StageKind kind = StageKind::Transfer;
  ResourceSet resources = 0;
  double duration = 0;
};

/// Ordered stages of one task unit; a stream runs them back to back.
struct TaskTimeline {
  Engine engine = Engine::Filter;
  std::vector<StageSpec> stages;
};

struct StageRecord {
  std::size_t task = 0;
  std::size_t stream = 0;
  StageKind kind = StageKind::Transfer;
  ResourceSet resources = 0;
  double start = 0;
  double end = 0;
};

struct StreamSchedule {
  std::size_t streams = 0;
  std::vector<StageRecord> stages;
  double makespan = 0;

  double busy_time(Resource r) const;
  double max_resource_busy() const;
  double total_stage_time() const;
  /// True when no two stages holding a common resource overlap in time.
  bool resources_exclusive() const;
};

/// Event-driven clock over S streams and three exclusive resources (PCIe, GPU,
/// CPU compactor). Idle streams take the next task in dispatch order (lowest
/// stream index first); stage requests are granted first-come first-served as
/// soon as every resource they need is free. A fused zero-copy stage holds
/// PCIe and GPU together.
class SimClock {
 public:
  explicit SimClock(std::size_t streams);
  StreamSchedule run(std::span<const TaskTimeline> tasks) const;

 private:
  std::size_t streams_;
};

/// Per-iteration CSV row.
struct IterationMetrics {
  std::size_t iteration = 0;
  std::uint64_t active_vertices = 0;
  std::uint64_t active_edges = 0;
  std::size_t filter_partitions = 0;
  std::size_t compaction_partitions = 0;
  std::size_t zerocopy_partitions = 0;
  std::uint64_t bytes_filter = 0;
  std::uint64_t bytes_compaction_payload = 0;
  std::uint64_t bytes_zerocopy_lines = 0;
  std::uint64_t tlps_total = 0;
  double cpu_compact_time = 0;
  double makespan = 0;

  // Not part of the CSV schema.
  std::size_t filter_units = 0;
  std::uint64_t kernel_edges = 0;
  std::uint64_t recompute_edges = 0;
  std::uint64_t selection_bytes = 0;

  std::uint64_t bytes_total() const { return bytes_filter + bytes_compaction_payload + bytes_zerocopy_lines; }
  bool operator==(const IterationMetrics&) const = default;
};

/// What one task unit moved and computed.
struct TaskOutcome {
  Engine engine = Engine::Filter;
  std::uint64_t active_vertices = 0;
  std::uint64_t edges_processed = 0;
  std::uint64_t bytes = 0;
  std::uint64_t tlps = 0;
  double transfer_time = 0;
  double cpu_time = 0;
  std::uint64_t recompute_edges = 0;
};

/// Edges and index of a compacted active subgraph, as shipped to the device.
struct CompactedSubgraph {
  std::vector<VertexId> vertices;
  std::vector<EdgeIndex> index;  // start of each vertex's list in `neighbors`
  std::vector<VertexId> neighbors;
  std::vector<Weight> weights;
};

CompactedSubgraph compact_active(const TaskUnit& unit, const CsrGraph& g, const PartitionTable& table,
                                 const FrontierState& frontier, bool with_weights);

/// Shared context of the three engine emulations for one iteration.
struct ExecContext {
  const CsrGraph& graph;
  const PartitionTable& table;
  const FrontierState& frontier;
  const CostModelConfig& cfg;
  VertexProgram& program;
  Bitmap& changed;     // receives activations (live pending set when asynchronous)
  bool asynchronous;   // pushes clear the pusher's pending bit first
};

/// Whole partitions cross the link; the kernel visits only active vertices.
TaskOutcome exec_filter_task(const TaskUnit& unit, ExecContext& ctx);
/// CPU gathers active neighbour lists plus an index, then one bulk transfer.
TaskOutcome exec_compaction_task(const TaskUnit& unit, ExecContext& ctx);
/// Per-vertex cache-line reads of host memory batched into TLPs.
TaskOutcome exec_zero_copy_task(const TaskUnit& unit, ExecContext& ctx);

/// Stage list of a finished task: compact -> transfer -> kernel for
/// compaction, transfer -> kernel (-> recompute) for filter, one fused
/// transfer+kernel stage of length max(transfer, kernel) for zero-copy.
TaskTimeline make_timeline(const TaskOutcome& outcome, const CostModelConfig& cfg);

struct IterationResult {
  FrontierState next;
  IterationMetrics metrics;
  StreamSchedule schedule;
  std::vector<TaskOutcome> tasks;
};

/// Executes one plan: applies every unit's pushes in dispatch order, runs the
/// recompute pass on filter units when the policy asks for it, then replays
/// the units on the simulated clock. Active zero-degree vertices of partitions
/// that received no task are consumed in place (they need no edge data).
/// Throws ConsistencyError when a unit's measured volume disagrees with the
/// plan.
IterationResult run_iteration(const CsrGraph& g, const PartitionTable& table, const TransferPlan& plan,
                              const FrontierState& frontier, VertexProgram& program,
                              const PriorityPolicy& policy, const CostModelConfig& cfg,
                              std::size_t streams);

}  // namespace hxsim

#endif  // HXSIM_EXEC_SIM_HPP
