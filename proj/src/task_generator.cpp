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

#include "hxsim/task_generator.hpp"

#include <string>

namespace hxsim {

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::Filter: return "filter";
    case Engine::Compaction: return "compaction";
    case Engine::ZeroCopy: return "zerocopy";
  }
  return "?";
}

std::string_view to_string(EngineMode m) {
  switch (m) {
    case EngineMode::Hybrid: return "hybrid";
    case EngineMode::Filter: return "filter";
    case EngineMode::Compaction: return "compaction";
    case EngineMode::ZeroCopy: return "zerocopy";
  }
  return "?";
}

EngineMode parse_engine_mode(std::string_view s) {
  if (s == "hybrid") return EngineMode::Hybrid;
  if (s == "filter") return EngineMode::Filter;
  if (s == "compaction") return EngineMode::Compaction;
  if (s == "zerocopy") return EngineMode::ZeroCopy;
  throw ConfigError("unknown engine mode '" + std::string(s) + "'");
}

CostTriple price_partition(const PartitionActivity& p, const CostModelConfig& cfg) {
  return {cost_filter(p, cfg), cost_compaction(p, cfg, false), cost_zero_copy(p, cfg)};
}

Engine select_engine(const CostTriple& c, double alpha, double beta) {
  if (c.compaction < alpha * c.filter && c.compaction < beta * c.zero_copy) return Engine::Compaction;
  if (c.zero_copy < c.filter) return Engine::ZeroCopy;
  return Engine::Filter;
}

std::vector<std::optional<Engine>> select_engines(std::span<const PartitionActivity> activities,
                                                  const CostModelConfig& cfg, EngineMode mode) {
  std::vector<std::optional<Engine>> out(activities.size());
  // rtt is a common factor of all three costs, so it drops out of the comparison.
  CostModelConfig unit_rtt = cfg;
  unit_rtt.rtt = 1.0;
  for (std::size_t i = 0; i < activities.size(); ++i) {
    const auto& a = activities[i];
    if (!a.active()) continue;
    switch (mode) {
      case EngineMode::Hybrid: out[i] = select_engine(price_partition(a, unit_rtt), cfg.alpha, cfg.beta); break;
      case EngineMode::Filter: out[i] = Engine::Filter; break;
      case EngineMode::Compaction: out[i] = Engine::Compaction; break;
      case EngineMode::ZeroCopy: out[i] = Engine::ZeroCopy; break;
    }
  }
  return out;
}

std::size_t TransferPlan::partitions_with(Engine e) const {
  std::size_t n = 0;
  for (const auto& c : choices) n += (c && *c == e);
  return n;
}

std::vector<const TaskUnit*> TransferPlan::dispatch_order() const {
  std::vector<const TaskUnit*> order;
  order.reserve(filter_tasks.size() + 2);
  for (const auto& t : filter_tasks) order.push_back(&t);
  if (zero_copy_task) order.push_back(&*zero_copy_task);
  if (compaction_task) order.push_back(&*compaction_task);
  return order;
}

void price_unit(TaskUnit& unit, const CostModelConfig& cfg) {
  const auto& a = unit.activity;
  switch (unit.engine) {
    case Engine::Filter:
      unit.bytes = filter_bytes(a, cfg);
      unit.tlps = filter_tlps(a, cfg);
      unit.transfer_cost = cost_filter(a, cfg);
      break;
    case Engine::Compaction:
      unit.bytes = compaction_bytes(a, cfg);
      unit.tlps = compaction_tlps(a, cfg);
      unit.transfer_cost = cost_compaction(a, cfg, false);
      break;
    case Engine::ZeroCopy:
      unit.bytes = zero_copy_line_bytes(a, cfg);
      unit.tlps = zero_copy_tlps(a, cfg);
      unit.transfer_cost = cost_zero_copy(a, cfg);
      break;
  }
}

TransferPlan build_plan(std::span<const std::optional<Engine>> choices,
                        std::span<const PartitionActivity> activities, const PartitionTable& table,
                        const CostModelConfig& cfg) {
  if (choices.size() != activities.size() || choices.size() != table.size())
    throw ConsistencyError("choices, activities and partition table disagree in size");
  TransferPlan plan;
  plan.choices.assign(choices.begin(), choices.end());
  plan.selection_bytes = choices.size();

  auto add_to = [&](TaskUnit& unit, std::size_t i) {
    unit.partitions.push_back(i);
    unit.activity += activities[i];
  };

  std::optional<TaskUnit> run;  // filter unit under construction
  auto close_run = [&] {
    if (run) {
      plan.filter_tasks.push_back(std::move(*run));
      run.reset();
    }
  };
  for (std::size_t i = 0; i < choices.size(); ++i) {
    if (choices[i] && !activities[i].active())
      throw ConsistencyError("engine chosen for a partition without active edges");
    if (choices[i] == Engine::Filter) {
      if (run && run->partitions.size() >= cfg.k) close_run();
      if (!run) run.emplace().engine = Engine::Filter;
      add_to(*run, i);
      continue;
    }
    close_run();
    if (!choices[i]) continue;
    auto& merged = *choices[i] == Engine::Compaction ? plan.compaction_task : plan.zero_copy_task;
    if (!merged) merged.emplace().engine = *choices[i];
    add_to(*merged, i);
  }
  close_run();

  for (auto& t : plan.filter_tasks) price_unit(t, cfg);
  if (plan.compaction_task) price_unit(*plan.compaction_task, cfg);
  if (plan.zero_copy_task) price_unit(*plan.zero_copy_task, cfg);
  return plan;
}

}  // namespace hxsim
