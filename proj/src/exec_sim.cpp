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

#include "hxsim/exec_sim.hpp"

#include <algorithm>
#include <list>
#include <queue>
#include <tuple>

namespace hxsim {

std::string_view to_string(StageKind k) {
  switch (k) {
    case StageKind::Compact: return "compact";
    case StageKind::Transfer: return "transfer";
    case StageKind::Kernel: return "kernel";
    case StageKind::Recompute: return "recompute";
    case StageKind::ZeroCopyFused: return "zerocopy";
  }
  return "?";
}

double StreamSchedule::busy_time(Resource r) const {
  double t = 0;
  for (const auto& s : stages)
    if (s.resources & resource_bit(r)) t += s.end - s.start;
  return t;
}

double StreamSchedule::max_resource_busy() const {
  return std::max({busy_time(Resource::Pcie), busy_time(Resource::Gpu), busy_time(Resource::Cpu)});
}

double StreamSchedule::total_stage_time() const {
  double t = 0;
  for (const auto& s : stages) t += s.end - s.start;
  return t;
}

bool StreamSchedule::resources_exclusive() const {
  for (Resource r : {Resource::Pcie, Resource::Gpu, Resource::Cpu}) {
    std::vector<std::pair<double, double>> iv;
    for (const auto& s : stages)
      if ((s.resources & resource_bit(r)) && s.end > s.start) iv.emplace_back(s.start, s.end);
    std::sort(iv.begin(), iv.end());
    for (std::size_t i = 1; i < iv.size(); ++i)
      if (iv[i].first < iv[i - 1].second) return false;
  }
  return true;
}

SimClock::SimClock(std::size_t streams) : streams_(streams) {
  if (streams == 0) throw ConfigError("at least one stream is required");
}

StreamSchedule SimClock::run(std::span<const TaskTimeline> tasks) const {
  StreamSchedule out;
  out.streams = streams_;

  struct StreamState {
    std::size_t task = 0;
    std::size_t stage = 0;
    std::size_t record = 0;  // granted stage in out.stages
    bool busy = false;
  };
  std::vector<StreamState> streams(streams_);
  std::size_t next_task = 0;
  ResourceSet held = 0;
  std::list<std::size_t> waiting;  // streams with an ungranted stage request, FIFO

  // (time, sequence, stream): completion of the stream's current stage.
  using Event = std::tuple<double, std::uint64_t, std::size_t>;
  std::priority_queue<Event, std::vector<Event>, std::greater<>> events;
  std::uint64_t seq = 0;

  auto stage_of = [&](std::size_t s) -> const StageSpec& {
    return tasks[streams[s].task].stages[streams[s].stage];
  };
  auto take_task = [&](std::size_t s) {
    while (next_task < tasks.size() && tasks[next_task].stages.empty()) ++next_task;
    if (next_task >= tasks.size()) {
      streams[s].busy = false;
      return;
    }
    streams[s] = {next_task++, 0, 0, true};
    waiting.push_back(s);
  };
  auto grant = [&](double now) {
    for (auto it = waiting.begin(); it != waiting.end();) {
      const std::size_t s = *it;
      const StageSpec& st = stage_of(s);
      if (st.resources & held) {
        ++it;
        continue;
      }
      held |= st.resources;
      streams[s].record = out.stages.size();
      out.stages.push_back({streams[s].task, s, st.kind, st.resources, now, now + st.duration});
      events.emplace(now + st.duration, seq++, s);
      it = waiting.erase(it);
    }
  };

  for (std::size_t s = 0; s < streams_; ++s) take_task(s);
  grant(0.0);

  while (!events.empty()) {
    const double now = std::get<0>(events.top());
    while (!events.empty() && std::get<0>(events.top()) == now) {
      const std::size_t s = std::get<2>(events.top());
      events.pop();
      held &= static_cast<ResourceSet>(~out.stages[streams[s].record].resources);
      auto& st = streams[s];
      if (++st.stage < tasks[st.task].stages.size()) {
        waiting.push_back(s);
      } else {
        take_task(s);
      }
    }
    grant(now);
    out.makespan = std::max(out.makespan, now);
  }
  return out;
}

namespace {

void check(bool ok, const char* what) {
  if (!ok) throw ConsistencyError(what);
}

void push_vertex(ExecContext& ctx, VertexId v, std::span<const VertexId> nbrs, std::span<const Weight> w) {
  if (ctx.asynchronous) ctx.changed.reset(v);
  ctx.program.push(v, nbrs, w, ctx.changed);
}

}  // namespace

TaskOutcome exec_filter_task(const TaskUnit& unit, ExecContext& ctx) {
  check(unit.engine == Engine::Filter && !unit.partitions.empty(), "not a filter unit");
  for (std::size_t i = 1; i < unit.partitions.size(); ++i)
    check(unit.partitions[i] == unit.partitions[i - 1] + 1, "filter unit partitions are not consecutive");

  const auto& g = ctx.graph;
  const VertexId first = ctx.table.ranges[unit.partitions.front()].begin;
  const VertexId last = ctx.table.ranges[unit.partitions.back()].end;
  const EdgeIndex base = g.offsets()[first];
  const EdgeIndex count = g.offsets()[last] - base;

  // The unit's edge block as it sits on the device after the bulk copy.
  const auto dev_neighbors = g.neighbors().subspan(base, count);
  const auto dev_weights = ctx.program.uses_weights() && g.weighted() ? g.weights().subspan(base, count)
                                                                       : std::span<const Weight>{};

  TaskOutcome out;
  out.engine = Engine::Filter;
  PartitionActivity moved;
  moved.total_edges = count;
  ctx.frontier.active.for_each_set(first, last, [&](std::size_t v) {
    const EdgeIndex off = g.offsets()[v] - base;
    const EdgeIndex deg = g.out_degree(v);
    ++out.active_vertices;
    out.edges_processed += deg;
    push_vertex(ctx, v, dev_neighbors.subspan(off, deg),
                dev_weights.empty() ? dev_weights : dev_weights.subspan(off, deg));
  });
  moved.active_edges = out.edges_processed;
  check(moved.total_edges == unit.activity.total_edges && moved.active_edges == unit.activity.active_edges,
        "filter unit does not match the frontier it was planned for");
  out.bytes = filter_bytes(moved, ctx.cfg);
  out.tlps = filter_tlps(moved, ctx.cfg);
  out.transfer_time = cost_filter(moved, ctx.cfg);
  return out;
}

CompactedSubgraph compact_active(const TaskUnit& unit, const CsrGraph& g, const PartitionTable& table,
                                 const FrontierState& frontier, bool with_weights) {
  CompactedSubgraph c;
  c.vertices.reserve(unit.activity.active_vertices);
  c.index.reserve(unit.activity.active_vertices);
  c.neighbors.reserve(unit.activity.active_edges);
  for (std::size_t p : unit.partitions) {
    const auto& r = table.ranges[p];
    frontier.active.for_each_set(r.begin, r.end, [&](std::size_t v) {
      c.vertices.push_back(v);
      c.index.push_back(c.neighbors.size());
      auto nbrs = g.neighbors_of(v);
      c.neighbors.insert(c.neighbors.end(), nbrs.begin(), nbrs.end());
      if (with_weights) {
        auto w = g.weights_of(v);
        c.weights.insert(c.weights.end(), w.begin(), w.end());
      }
    });
  }
  return c;
}

TaskOutcome exec_compaction_task(const TaskUnit& unit, ExecContext& ctx) {
  check(unit.engine == Engine::Compaction, "not a compaction unit");
  const bool with_weights = ctx.program.uses_weights() && ctx.graph.weighted();
  const CompactedSubgraph c = compact_active(unit, ctx.graph, ctx.table, ctx.frontier, with_weights);

  TaskOutcome out;
  out.engine = Engine::Compaction;
  out.active_vertices = c.vertices.size();
  out.edges_processed = c.neighbors.size();
  out.bytes = c.neighbors.size() * ctx.cfg.d1 + c.index.size() * ctx.cfg.d2;
  check(out.bytes == compaction_bytes(unit.activity, ctx.cfg),
        "compaction unit does not match the frontier it was planned for");
  PartitionActivity moved = unit.activity;
  out.tlps = compaction_tlps(moved, ctx.cfg);
  out.transfer_time = cost_compaction(moved, ctx.cfg, false);
  out.cpu_time = compaction_cpu_time(out.bytes, ctx.cfg);

  const std::span<const VertexId> nbrs(c.neighbors);
  const std::span<const Weight> wts(c.weights);
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    const EdgeIndex begin = c.index[i];
    const EdgeIndex end = i + 1 < c.index.size() ? c.index[i + 1] : c.neighbors.size();
    push_vertex(ctx, c.vertices[i], nbrs.subspan(begin, end - begin),
                wts.empty() ? wts : wts.subspan(begin, end - begin));
  }
  return out;
}

TaskOutcome exec_zero_copy_task(const TaskUnit& unit, ExecContext& ctx) {
  check(unit.engine == Engine::ZeroCopy, "not a zero-copy unit");
  const auto& g = ctx.graph;
  const bool with_weights = ctx.program.uses_weights() && g.weighted();

  TaskOutcome out;
  out.engine = Engine::ZeroCopy;
  PartitionActivity moved;
  moved.total_edges = unit.activity.total_edges;
  for (std::size_t p : unit.partitions) {
    const auto& r = ctx.table.ranges[p];
    ctx.frontier.active.for_each_set(r.begin, r.end, [&](std::size_t v) {
      const EdgeIndex deg = g.out_degree(v);
      ++moved.active_vertices;
      moved.active_edges += deg;
      moved.zc_requests += lines_touched(g.offsets()[v], deg, ctx.cfg);
      push_vertex(ctx, v, g.neighbors_of(v), with_weights ? g.weights_of(v) : std::span<const Weight>{});
    });
  }
  check(moved.zc_requests == unit.activity.zc_requests && moved.active_edges == unit.activity.active_edges,
        "zero-copy unit does not match the frontier it was planned for");
  out.active_vertices = moved.active_vertices;
  out.edges_processed = moved.active_edges;
  out.bytes = zero_copy_line_bytes(moved, ctx.cfg);
  out.tlps = zero_copy_tlps(moved, ctx.cfg);
  out.transfer_time = cost_zero_copy(moved, ctx.cfg);
  return out;
}

TaskTimeline make_timeline(const TaskOutcome& o, const CostModelConfig& cfg) {
  constexpr ResourceSet pcie = resource_bit(Resource::Pcie);
  constexpr ResourceSet gpu = resource_bit(Resource::Gpu);
  constexpr ResourceSet cpu = resource_bit(Resource::Cpu);
  TaskTimeline t;
  t.engine = o.engine;
  const double kernel = kernel_time(o.edges_processed, cfg);
  switch (o.engine) {
    case Engine::Filter:
      t.stages.push_back({StageKind::Transfer, pcie, o.transfer_time});
      t.stages.push_back({StageKind::Kernel, gpu, kernel});
      if (o.recompute_edges > 0)
        t.stages.push_back({StageKind::Recompute, gpu, kernel_time(o.recompute_edges, cfg)});
      break;
    case Engine::Compaction:
      t.stages.push_back({StageKind::Compact, cpu, o.cpu_time});
      t.stages.push_back({StageKind::Transfer, pcie, o.transfer_time});
      t.stages.push_back({StageKind::Kernel, gpu, kernel});
      break;
    case Engine::ZeroCopy:
      t.stages.push_back({StageKind::ZeroCopyFused, pcie | gpu, std::max(o.transfer_time, kernel)});
      break;
  }
  return t;
}

IterationResult run_iteration(const CsrGraph& g, const PartitionTable& table, const TransferPlan& plan,
                              const FrontierState& frontier, VertexProgram& program,
                              const PriorityPolicy& policy, const CostModelConfig& cfg,
                              std::size_t streams) {
  check(frontier.active.size() == g.num_vertices(), "frontier size does not match the graph");
  check(plan.choices.size() == table.size(), "plan does not match the partition table");
  policy.validate(program);

  const bool async = policy.asynchronous();
  IterationResult res;
  Bitmap changed = async ? frontier.active : Bitmap(g.num_vertices());
  program.begin_iteration(!async);
  ExecContext ctx{g, table, frontier, cfg, program, changed, async};

  // Active vertices of partitions without a task have no out-edges.
  for (std::size_t p = 0; p < table.size(); ++p) {
    if (plan.choices[p]) continue;
    frontier.active.for_each_set(table.ranges[p].begin, table.ranges[p].end, [&](std::size_t v) {
      check(g.out_degree(v) == 0, "active edges in a partition the plan skipped");
      push_vertex(ctx, v, {}, {});
    });
  }

  for (const TaskUnit* unit : plan.dispatch_order()) {
    TaskOutcome o;
    switch (unit->engine) {
      case Engine::Filter:
        o = exec_filter_task(*unit, ctx);
        if (policy.recomputes()) o.recompute_edges = recompute_pass(*unit, g, table, program, changed);
        break;
      case Engine::Compaction: o = exec_compaction_task(*unit, ctx); break;
      case Engine::ZeroCopy: o = exec_zero_copy_task(*unit, ctx); break;
    }
    res.tasks.push_back(o);
  }
  program.end_iteration(changed);

  std::vector<TaskTimeline> timelines;
  timelines.reserve(res.tasks.size());
  for (const auto& o : res.tasks) timelines.push_back(make_timeline(o, cfg));
  res.schedule = SimClock(streams).run(timelines);

  auto& m = res.metrics;
  m.iteration = frontier.iteration;
  m.filter_partitions = plan.partitions_with(Engine::Filter);
  m.compaction_partitions = plan.partitions_with(Engine::Compaction);
  m.zerocopy_partitions = plan.partitions_with(Engine::ZeroCopy);
  m.filter_units = plan.filter_tasks.size();
  m.selection_bytes = plan.selection_bytes;
  m.active_vertices = frontier.active.count();
  for (const auto& o : res.tasks) {
    m.active_edges += o.edges_processed;
    switch (o.engine) {
      case Engine::Filter: m.bytes_filter += o.bytes; break;
      case Engine::Compaction: m.bytes_compaction_payload += o.bytes; break;
      case Engine::ZeroCopy: m.bytes_zerocopy_lines += o.bytes; break;
    }
    m.tlps_total += o.tlps;
    m.cpu_compact_time += o.cpu_time;
    m.kernel_edges += o.edges_processed + o.recompute_edges;
    m.recompute_edges += o.recompute_edges;
  }
  m.makespan = res.schedule.makespan;

  res.next = FrontierState();
  res.next.active = std::move(changed);
  res.next.iteration = frontier.iteration + 1;
  return res;
}

}  // namespace hxsim
