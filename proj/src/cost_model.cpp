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

#include "hxsim/cost_model.hpp"

#include <cmath>

namespace hxsim {

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return a / b + (a % b != 0); }

}  // namespace

void CostModelConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ConfigError(what);
  };
  require(d1 > 0, "d1 must be positive");
  require(d2 > 0, "d2 must be positive");
  require(m > 0, "m must be positive");
  require(mr > 0, "MR must be positive");
  require(rtt > 0, "rtt must be positive");
  require(gamma > 0 && gamma <= 1, "gamma must lie in (0, 1]");
  require(alpha > 0 && alpha < 1, "alpha must lie in (0, 1)");
  require(beta > 0 && beta < 1, "beta must lie in (0, 1)");
  require(k >= 1, "k must be at least 1");
  require(compaction_throughput > 0, "compaction throughput must be positive");
  require(kernel_throughput > 0, "kernel throughput must be positive");
}

PartitionActivity& PartitionActivity::operator+=(const PartitionActivity& o) {
  active_vertices += o.active_vertices;
  active_edges += o.active_edges;
  zc_requests += o.zc_requests;
  total_edges += o.total_edges;
  return *this;
}

std::uint64_t lines_touched(EdgeIndex first_entry, EdgeIndex degree, const CostModelConfig& cfg) {
  if (degree == 0) return 0;
  const std::uint64_t first_byte = first_entry * cfg.d1;
  const std::uint64_t last_byte = (first_entry + degree) * cfg.d1 - 1;
  return last_byte / cfg.m - first_byte / cfg.m + 1;
}

std::uint64_t min_requests(EdgeIndex degree, const CostModelConfig& cfg) {
  return ceil_div(degree * cfg.d1, cfg.m);
}

int alignment_penalty(const CsrGraph& g, VertexId v, const CostModelConfig& cfg) {
  const EdgeIndex deg = g.out_degree(v);
  return static_cast<int>(lines_touched(g.offsets()[v], deg, cfg) - min_requests(deg, cfg));
}

std::uint64_t zero_copy_requests(const CsrGraph& g, VertexId v, const CostModelConfig& cfg) {
  return lines_touched(g.offsets()[v], g.out_degree(v), cfg);
}

std::uint64_t filter_bytes(const PartitionActivity& p, const CostModelConfig& cfg) {
  return p.total_edges * cfg.d1;
}

std::uint64_t filter_tlps(const PartitionActivity& p, const CostModelConfig& cfg) {
  return ceil_div(filter_bytes(p, cfg), cfg.tlp_bytes());
}

std::uint64_t compaction_bytes(const PartitionActivity& p, const CostModelConfig& cfg) {
  return p.active_edges * cfg.d1 + p.active_vertices * cfg.d2;
}

std::uint64_t compaction_tlps(const PartitionActivity& p, const CostModelConfig& cfg) {
  return ceil_div(compaction_bytes(p, cfg), cfg.tlp_bytes());
}

std::uint64_t zero_copy_line_bytes(const PartitionActivity& p, const CostModelConfig& cfg) {
  return p.zc_requests * cfg.m;
}

std::uint64_t zero_copy_tlps(const PartitionActivity& p, const CostModelConfig& cfg) {
  return ceil_div(p.zc_requests, cfg.mr);
}

double rtt_zero_copy(const PartitionActivity& p, const CostModelConfig& cfg) {
  const double ratio = p.total_edges == 0
                           ? 0.0
                           : static_cast<double>(p.active_edges) / static_cast<double>(p.total_edges);
  return cfg.gamma * cfg.rtt + (1.0 - cfg.gamma) * ratio * cfg.rtt;
}

double cost_filter(const PartitionActivity& p, const CostModelConfig& cfg) {
  return static_cast<double>(filter_tlps(p, cfg)) * cfg.rtt;
}

double cost_compaction(const PartitionActivity& p, const CostModelConfig& cfg, bool include_cpu) {
  double t = static_cast<double>(compaction_tlps(p, cfg)) * cfg.rtt;
  if (include_cpu) t += compaction_cpu_time(compaction_bytes(p, cfg), cfg);
  return t;
}

double cost_zero_copy(const PartitionActivity& p, const CostModelConfig& cfg) {
  return static_cast<double>(zero_copy_tlps(p, cfg)) * rtt_zero_copy(p, cfg);
}

double compaction_cpu_time(std::uint64_t bytes, const CostModelConfig& cfg) {
  return static_cast<double>(bytes) / cfg.compaction_throughput * cfg.rtt;
}

double kernel_time(std::uint64_t edges, const CostModelConfig& cfg) {
  return static_cast<double>(edges) / cfg.kernel_throughput * cfg.rtt;
}

std::vector<PartitionActivity> compute_activity(const CsrGraph& g, const PartitionTable& table,
                                                const FrontierState& frontier,
                                                const CostModelConfig& cfg) {
  if (frontier.active.size() != g.num_vertices())
    throw ConsistencyError("frontier size does not match the graph");
  std::vector<PartitionActivity> out(table.size());
  const auto offsets = g.offsets();
  for (std::size_t i = 0; i < table.size(); ++i) {
    PartitionActivity& a = out[i];
    a.partition = i;
    a.total_edges = table.edge_counts[i];
    frontier.active.for_each_set(table.ranges[i].begin, table.ranges[i].end, [&](std::size_t v) {
      const EdgeIndex deg = offsets[v + 1] - offsets[v];
      ++a.active_vertices;
      a.active_edges += deg;
      a.zc_requests += lines_touched(offsets[v], deg, cfg);
    });
  }
  return out;
}

}  // namespace hxsim
