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

#ifndef HXSIM_COST_MODEL_HPP
#define HXSIM_COST_MODEL_HPP

#include <cstdint>
#include <vector>

#include "hxsim/frontier.hpp"
#include "hxsim/graph.hpp"
#include "hxsim/partition.hpp"

namespace hxsim {

/// Constants of the TLP-level transfer cost model. Times are abstract: one
/// rtt is the round trip of one saturated TLP. The two throughputs are per rtt
/// so every modelled time scales linearly with rtt.
struct CostModelConfig {
  std::uint32_t d1 = 4;    // bytes per edge-array entry
  std::uint32_t d2 = 4;    // bytes per compacted index entry
  std::uint32_t m = 128;   // bytes per outstanding memory request
  std::uint32_t mr = 256;  // outstanding requests per TLP
  double rtt = 1.0;
  double gamma = 0.625;
  double alpha = 0.8;
  double beta = 0.4;
  std::uint32_t k = 4;  // filter partitions merged per task unit
  double compaction_throughput = 8.0 * 128 * 256;  // bytes per rtt
  double kernel_throughput = 32768.0;              // edges per rtt

  std::uint64_t tlp_bytes() const { return std::uint64_t{m} * mr; }

  /// Throws ConfigError unless m, mr, rtt > 0, 0 < gamma <= 1,
  /// 0 < alpha, beta < 1, k >= 1, d1, d2 >= 1 and both throughputs > 0.
  void validate() const;

  bool operator==(const CostModelConfig&) const = default;
};

/// Per-partition frontier aggregates consumed by the three cost functions.
struct PartitionActivity {
  std::size_t partition = 0;
  std::uint64_t active_vertices = 0;
  std::uint64_t active_edges = 0;
  std::uint64_t zc_requests = 0;
  std::uint64_t total_edges = 0;

  bool active() const { return active_edges > 0; }
  PartitionActivity& operator+=(const PartitionActivity& o);
  bool operator==(const PartitionActivity&) const = default;
};

/// Aligned m-byte lines touched by an edge span of `degree` entries starting
/// at entry `first_entry`; this is the zero-copy request count of the vertex.
std::uint64_t lines_touched(EdgeIndex first_entry, EdgeIndex degree, const CostModelConfig& cfg);

/// Minimum request count ceil(degree * d1 / m).
std::uint64_t min_requests(EdgeIndex degree, const CostModelConfig& cfg);

/// 1 when v's neighbour span needs one request more than its minimum.
int alignment_penalty(const CsrGraph& g, VertexId v, const CostModelConfig& cfg);

std::uint64_t zero_copy_requests(const CsrGraph& g, VertexId v, const CostModelConfig& cfg);

// TLP counts and byte volumes of each engine for one partition (or merged unit).
std::uint64_t filter_bytes(const PartitionActivity& p, const CostModelConfig& cfg);
std::uint64_t filter_tlps(const PartitionActivity& p, const CostModelConfig& cfg);
std::uint64_t compaction_bytes(const PartitionActivity& p, const CostModelConfig& cfg);
std::uint64_t compaction_tlps(const PartitionActivity& p, const CostModelConfig& cfg);
std::uint64_t zero_copy_line_bytes(const PartitionActivity& p, const CostModelConfig& cfg);
std::uint64_t zero_copy_tlps(const PartitionActivity& p, const CostModelConfig& cfg);

/// gamma*rtt + (1-gamma)*(active_edges/total_edges)*rtt; the ratio is 0 for an
/// edgeless partition.
double rtt_zero_copy(const PartitionActivity& p, const CostModelConfig& cfg);

double cost_filter(const PartitionActivity& p, const CostModelConfig& cfg);
double cost_compaction(const PartitionActivity& p, const CostModelConfig& cfg, bool include_cpu);
double cost_zero_copy(const PartitionActivity& p, const CostModelConfig& cfg);

/// CPU time to gather `bytes` of compacted data.
double compaction_cpu_time(std::uint64_t bytes, const CostModelConfig& cfg);
/// Simulated kernel time for `edges` processed edges.
double kernel_time(std::uint64_t edges, const CostModelConfig& cfg);

/// Exact per-partition aggregates of the frontier.
std::vector<PartitionActivity> compute_activity(const CsrGraph& g, const PartitionTable& table,
                                                const FrontierState& frontier,
                                                const CostModelConfig& cfg);

}  // namespace hxsim

#endif  // HXSIM_COST_MODEL_HPP
