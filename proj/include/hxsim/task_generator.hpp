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

#ifndef HXSIM_TASK_GENERATOR_HPP
#define HXSIM_TASK_GENERATOR_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hxsim/cost_model.hpp"

namespace hxsim {

enum class Engine : std::uint8_t { Filter, Compaction, ZeroCopy };

/// Hybrid picks per partition by cost; the others force a single engine.
enum class EngineMode : std::uint8_t { Hybrid, Filter, Compaction, ZeroCopy };

std::string_view to_string(Engine e);
std::string_view to_string(EngineMode m);
EngineMode parse_engine_mode(std::string_view s);

struct CostTriple {
  double filter = 0;      // Tef
  double compaction = 0;  // Tec, transfer term only
  double zero_copy = 0;   // Tiz
};

CostTriple price_partition(const PartitionActivity& p, const CostModelConfig& cfg);

/// Compaction iff Tec < alpha*Tef and Tec < beta*Tiz; otherwise zero-copy iff
/// Tiz < Tef; otherwise filter. Equalities fall through.
Engine select_engine(const CostTriple& c, double alpha, double beta);

/// One choice per partition with active edges; nullopt for inactive ones.
std::vector<std::optional<Engine>> select_engines(std::span<const PartitionActivity> activities,
                                                  const CostModelConfig& cfg,
                                                  EngineMode mode = EngineMode::Hybrid);

/// A scheduling granule: up to k consecutive filter partitions, or the merged
/// compaction / zero-copy set.
struct TaskUnit {
  Engine engine = Engine::Filter;
  std::vector<std::size_t> partitions;
  PartitionActivity activity;  // summed over partitions
  std::uint64_t bytes = 0;     // whole partitions / payload+index / touched lines
  std::uint64_t tlps = 0;
  double transfer_cost = 0;    // modelled, transfer only
  double priority = 0;         // set by the scheduler
};

struct TransferPlan {
  std::vector<TaskUnit> filter_tasks;
  std::optional<TaskUnit> compaction_task;
  std::optional<TaskUnit> zero_copy_task;
  std::vector<std::optional<Engine>> choices;
  std::uint64_t selection_bytes = 0;  // one byte per partition copied back

  bool empty() const { return filter_tasks.empty() && !compaction_task && !zero_copy_task; }
  std::size_t partitions_with(Engine e) const;

  /// Filter units in their current order, then zero-copy, then compaction.
  std::vector<const TaskUnit*> dispatch_order() const;
};

/// Task combination: consecutive filter partitions accumulate into a unit
/// until it holds k partitions or a partition that is not filter (including an
/// inactive one) breaks the run; compaction and zero-copy partitions each
/// merge into one unit.
TransferPlan build_plan(std::span<const std::optional<Engine>> choices,
                        std::span<const PartitionActivity> activities, const PartitionTable& table,
                        const CostModelConfig& cfg);

/// Prices a merged unit for its engine (bytes, TLPs, transfer cost).
void price_unit(TaskUnit& unit, const CostModelConfig& cfg);

}  // namespace hxsim

#endif  // HXSIM_TASK_GENERATOR_HPP
