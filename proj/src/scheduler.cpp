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

#include "hxsim/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace hxsim {

std::string_view to_string(PriorityMode m) {
  switch (m) {
    case PriorityMode::None: return "none";
    case PriorityMode::HubDriven: return "hub";
    case PriorityMode::DeltaDriven: return "delta";
  }
  return "?";
}

PriorityMode parse_priority_mode(std::string_view s) {
  if (s == "none") return PriorityMode::None;
  if (s == "hub") return PriorityMode::HubDriven;
  if (s == "delta") return PriorityMode::DeltaDriven;
  throw ConfigError("unknown priority mode '" + std::string(s) + "'");
}

DeltaAggregate parse_delta_aggregate(std::string_view s) {
  if (s == "sum") return DeltaAggregate::Sum;
  if (s == "max") return DeltaAggregate::Max;
  throw ConfigError("unknown delta aggregate '" + std::string(s) + "'");
}

void PriorityPolicy::validate(const VertexProgram& program) const {
  if (mode == PriorityMode::DeltaDriven && !program.accumulative())
    throw ConfigError("delta-driven priority requires an accumulative algorithm (pr)");
}

double unit_score(const TaskUnit& unit, const PartitionTable& table, const FrontierState& frontier,
                  const PriorityPolicy& policy, std::span<const double> hub_scores,
                  const VertexProgram& program) {
  double score = 0.0;
  for (std::size_t p : unit.partitions) {
    const auto& r = table.ranges[p];
    switch (policy.mode) {
      case PriorityMode::None:
        return 0.0;
      case PriorityMode::HubDriven:
        frontier.active.for_each_set(r.begin, r.end, [&](std::size_t v) { score += hub_scores[v]; });
        break;
      case PriorityMode::DeltaDriven:
        frontier.active.for_each_set(r.begin, r.end, [&](std::size_t v) {
          const double d = std::abs(program.residual(v));
          score = policy.delta_agg == DeltaAggregate::Sum ? score + d : std::max(score, d);
        });
        break;
    }
  }
  return score;
}

void prioritize(TransferPlan& plan, const PartitionTable& table, const FrontierState& frontier,
                const PriorityPolicy& policy, std::span<const double> hub_scores,
                const VertexProgram& program) {
  policy.validate(program);
  if (policy.mode == PriorityMode::None) return;
  for (auto& t : plan.filter_tasks) t.priority = unit_score(t, table, frontier, policy, hub_scores, program);
  std::stable_sort(plan.filter_tasks.begin(), plan.filter_tasks.end(),
                   [](const TaskUnit& a, const TaskUnit& b) { return a.priority > b.priority; });
}

std::uint64_t recompute_pass(const TaskUnit& unit, const CsrGraph& g, const PartitionTable& table,
                             VertexProgram& program, Bitmap& pending) {
  std::vector<VertexId> again;
  for (std::size_t p : unit.partitions) {
    const auto& r = table.ranges[p];
    pending.for_each_set(r.begin, r.end, [&](std::size_t v) { again.push_back(v); });
  }
  std::uint64_t edges = 0;
  for (VertexId v : again) {
    pending.reset(v);
    program.push(v, g.neighbors_of(v), g.weights_of(v), pending);
    edges += g.out_degree(v);
  }
  return edges;
}

}  // namespace hxsim
