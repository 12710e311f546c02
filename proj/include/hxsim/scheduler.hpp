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

#ifndef HXSIM_SCHEDULER_HPP
#define HXSIM_SCHEDULER_HPP

#include <span>
#include <string_view>

#include "hxsim/algorithms.hpp"
#include "hxsim/task_generator.hpp"

namespace hxsim {

enum class PriorityMode : std::uint8_t { None, HubDriven, DeltaDriven };
enum class DeltaAggregate : std::uint8_t { Sum, Max };

std::string_view to_string(PriorityMode m);
PriorityMode parse_priority_mode(std::string_view s);
DeltaAggregate parse_delta_aggregate(std::string_view s);

/// None is synchronous (every push reads the iteration's starting state).
/// HubDriven and DeltaDriven run asynchronously, order filter units by score
/// and, when `recompute` is set, re-run each loaded filter unit exactly once.
struct PriorityPolicy {
  PriorityMode mode = PriorityMode::None;
  DeltaAggregate delta_agg = DeltaAggregate::Sum;
  bool recompute = true;

  bool asynchronous() const { return mode != PriorityMode::None; }
  bool recomputes() const { return asynchronous() && recompute; }

  /// DeltaDriven needs an accumulative program.
  void validate(const VertexProgram& program) const;
};

/// Hub mode: sum of H(v) over the unit's active vertices. Delta mode: sum (or
/// max) of the residuals of those vertices. Zero for None.
double unit_score(const TaskUnit& unit, const PartitionTable& table, const FrontierState& frontier,
                  const PriorityPolicy& policy, std::span<const double> hub_scores,
                  const VertexProgram& program);

/// Stable descending sort of the filter units by score; the merged compaction
/// and zero-copy units are untouched.
void prioritize(TransferPlan& plan, const PartitionTable& table, const FrontierState& frontier,
                const PriorityPolicy& policy, std::span<const double> hub_scores,
                const VertexProgram& program);

/// Second kernel pass over a unit whose edges are already resident: the
/// vertices of the unit holding unpushed updates at the start of the pass are
/// pushed once more. Moves no data. Returns the edges processed.
std::uint64_t recompute_pass(const TaskUnit& unit, const CsrGraph& g, const PartitionTable& table,
                             VertexProgram& program, Bitmap& pending);

}  // namespace hxsim

#endif  // HXSIM_SCHEDULER_HPP
