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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hxsim/partition.hpp"
#include "hxsim/task_generator.hpp"
#include "oracles.hpp"

namespace hxsim {
namespace {

constexpr auto F = Engine::Filter;
constexpr auto C = Engine::Compaction;
constexpr auto Z = Engine::ZeroCopy;

// A table of n single-vertex partitions, each vertex with `deg` edges.
struct Fixture {
  CsrGraph graph;
  PartitionTable table;
  std::vector<PartitionActivity> activity;
};

Fixture fixture(std::size_t n, EdgeIndex deg = 10) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v)
    for (EdgeIndex i = 0; i < deg; ++i) edges.push_back({v, (v + i) % n});
  Fixture f;
  f.graph = CsrGraph::from_edges(n, edges, true, false);
  f.table = partition_chunked(f.graph, deg * 4);
  FrontierState fr(n);
  for (VertexId v = 0; v < n; ++v) fr.active.set(v);
  f.activity = compute_activity(f.graph, f.table, fr, CostModelConfig{});
  return f;
}

std::vector<std::vector<std::size_t>> filter_units(const TransferPlan& p) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& t : p.filter_tasks) out.push_back(t.partitions);
  return out;
}

TEST(SelectEngine, DefaultThresholds) {
  CostModelConfig c;
  EXPECT_DOUBLE_EQ(c.alpha, 0.8);
  EXPECT_DOUBLE_EQ(c.beta, 0.4);
}

TEST(SelectEngine, SaturatedFullPartitionPicksFilter) {
  // degree-32 aligned vertices, all active: Tiz == Tef and Tec > alpha * Tef
  CostModelConfig c;
  PartitionActivity p{0, 4096, 4096 * 32, 4096, 4096 * 32};
  auto t = price_partition(p, c);
  EXPECT_DOUBLE_EQ(t.zero_copy, t.filter);
  EXPECT_GT(t.compaction, c.alpha * t.filter);
  EXPECT_EQ(select_engine(t, c.alpha, c.beta), F);
}

TEST(SelectEngine, SingleVertexInHugePartitionPicksZeroCopy) {
  CostModelConfig c;
  PartitionActivity p{0, 1, 32, 1, 1'000'000};
  auto t = price_partition(p, c);
  EXPECT_DOUBLE_EQ(t.filter, 123.0);
  EXPECT_NEAR(t.zero_copy, 0.625, 1e-4);
  EXPECT_DOUBLE_EQ(t.compaction, 1.0);
  EXPECT_EQ(select_engine(t, c.alpha, c.beta), Z);
}

TEST(SelectEngine, TiesFallThrough) {
  // Tec == alpha * Tef is not strictly smaller
  ASSERT_EQ(0.8 * 5.0, 4.0);
  EXPECT_EQ(select_engine({5, 4, 3}, 0.8, 0.4), Z);
  EXPECT_EQ(select_engine({8, 6, 100}, 0.75, 0.4), F);
  // Tec == beta * Tiz
  EXPECT_EQ(select_engine({100, 4, 10}, 0.8, 0.4), Z);
  // Tiz == Tef
  EXPECT_EQ(select_engine({10, 9, 10}, 0.8, 0.4), F);
  EXPECT_EQ(select_engine({0, 0, 0}, 0.8, 0.4), F);
  EXPECT_EQ(select_engine({10, 1, 100}, 0.8, 0.4), C);
}

TEST(SelectEngine, MatchesRestatedRuleOnRandomTriples) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 200.0);
  std::uniform_int_distribution<int> small(0, 20);
  for (int i = 0; i < 20000; ++i) {
    // mix continuous values with small integers so ties are common
    CostTriple t = i % 2 ? CostTriple{u(rng), u(rng), u(rng)}
                         : CostTriple{double(small(rng)), double(small(rng)), double(small(rng))};
    const auto want = oracle::pick(t.filter, t.compaction, t.zero_copy, 0.8, 0.4);
    const auto got = select_engine(t, 0.8, 0.4);
    EXPECT_EQ(static_cast<int>(got), static_cast<int>(want));
  }
}

TEST(SelectEngines, InactivePartitionsGetNoChoiceAndModesForce) {
  auto f = fixture(4);
  f.activity[1] = PartitionActivity{1, 0, 0, 0, f.activity[1].total_edges};
  for (auto mode : {EngineMode::Hybrid, EngineMode::Filter, EngineMode::Compaction, EngineMode::ZeroCopy}) {
    auto ch = select_engines(f.activity, CostModelConfig{}, mode);
    EXPECT_FALSE(ch[1].has_value());
    for (std::size_t i : {0u, 2u, 3u}) {
      ASSERT_TRUE(ch[i].has_value());
      if (mode == EngineMode::Filter) { EXPECT_EQ(*ch[i], F); }
      if (mode == EngineMode::Compaction) { EXPECT_EQ(*ch[i], C); }
      if (mode == EngineMode::ZeroCopy) { EXPECT_EQ(*ch[i], Z); }
    }
  }
}

TEST(BuildPlan, FiveFiltersWithKFour) {
  auto f = fixture(5);
  std::vector<std::optional<Engine>> ch{F, F, F, F, F};
  auto plan = build_plan(ch, f.activity, f.table, CostModelConfig{});
  EXPECT_EQ(filter_units(plan), (std::vector<std::vector<std::size_t>>{{0, 1, 2, 3}, {4}}));
  EXPECT_FALSE(plan.compaction_task);
  EXPECT_FALSE(plan.zero_copy_task);
}

TEST(BuildPlan, RunBrokenByNonFilter) {
  auto f = fixture(3);
  std::vector<std::optional<Engine>> ch{F, C, F};
  auto plan = build_plan(ch, f.activity, f.table, CostModelConfig{});
  EXPECT_EQ(filter_units(plan), (std::vector<std::vector<std::size_t>>{{0}, {2}}));
  ASSERT_TRUE(plan.compaction_task);
  EXPECT_EQ(plan.compaction_task->partitions, (std::vector<std::size_t>{1}));
}

TEST(BuildPlan, MergedUnitsAggregateActivity) {
  auto f = fixture(6);
  std::vector<std::optional<Engine>> ch{Z, C, Z, std::nullopt, C, F};
  f.activity[3] = PartitionActivity{3, 0, 0, 0, f.activity[3].total_edges};
  CostModelConfig c;
  auto plan = build_plan(ch, f.activity, f.table, c);
  ASSERT_TRUE(plan.zero_copy_task && plan.compaction_task);
  EXPECT_EQ(plan.zero_copy_task->partitions, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(plan.compaction_task->partitions, (std::vector<std::size_t>{1, 4}));
  EXPECT_EQ(plan.zero_copy_task->activity.active_edges, f.activity[0].active_edges + f.activity[2].active_edges);
  EXPECT_EQ(plan.zero_copy_task->bytes, (f.activity[0].zc_requests + f.activity[2].zc_requests) * c.m);
  EXPECT_EQ(plan.compaction_task->bytes,
            (f.activity[1].active_edges + f.activity[4].active_edges) * c.d1 +
                (f.activity[1].active_vertices + f.activity[4].active_vertices) * c.d2);
  EXPECT_EQ(plan.filter_tasks.at(0).bytes, f.activity[5].total_edges * c.d1);
  EXPECT_EQ(plan.selection_bytes, 6u);
  EXPECT_EQ(plan.partitions_with(Z), 2u);
  EXPECT_EQ(plan.partitions_with(C), 2u);
  EXPECT_EQ(plan.partitions_with(F), 1u);
  auto order = plan.dispatch_order();
  ASSERT_EQ(order.size(), 3u);
  EXPECT_EQ(order[0]->engine, F);
  EXPECT_EQ(order[1]->engine, Z);
  EXPECT_EQ(order[2]->engine, C);
}

TEST(BuildPlan, RejectsInconsistentInput) {
  auto f = fixture(3);
  std::vector<std::optional<Engine>> short_choices{F, F};
  EXPECT_THROW(build_plan(short_choices, f.activity, f.table, CostModelConfig{}), ConsistencyError);
  f.activity[0].active_edges = 0;
  std::vector<std::optional<Engine>> ch{F, F, F};
  EXPECT_THROW(build_plan(ch, f.activity, f.table, CostModelConfig{}), ConsistencyError);
}

TEST(BuildPlan, EmptyPlan) {
  auto f = fixture(3);
  std::vector<std::optional<Engine>> none(3);
  for (auto& a : f.activity) a = PartitionActivity{a.partition, 0, 0, 0, a.total_edges};
  auto plan = build_plan(none, f.activity, f.table, CostModelConfig{});
  EXPECT_TRUE(plan.empty());
  EXPECT_TRUE(plan.dispatch_order().empty());
}

// Independent count of filter units: split every maximal run of F into ceil(len/k) pieces.
std::size_t expected_filter_units(const std::vector<std::optional<Engine>>& ch, std::size_t k) {
  std::size_t units = 0, len = 0;
  for (std::size_t i = 0; i <= ch.size(); ++i) {
    if (i < ch.size() && ch[i] == F) {
      ++len;
      continue;
    }
    units += (len + k - 1) / k;
    len = 0;
  }
  return units;
}

TEST(BuildPlan, CoverageAndRunStructureOnRandomChoices) {
  std::mt19937_64 rng(32);
  auto f = fixture(40);
  for (int trial = 0; trial < 500; ++trial) {
    CostModelConfig c;
    c.k = 1 + rng() % 6;
    std::vector<std::optional<Engine>> ch(40);
    auto act = f.activity;
    for (std::size_t i = 0; i < 40; ++i) {
      const int r = rng() % 5;
      if (r == 4) {
        act[i].active_edges = act[i].active_vertices = act[i].zc_requests = 0;
      } else {
        ch[i] = r <= 1 ? F : (r == 2 ? C : Z);
      }
    }
    auto plan = build_plan(ch, act, f.table, c);
    std::set<std::size_t> seen;
    std::size_t count = 0;
    for (const auto* u : plan.dispatch_order()) {
      for (std::size_t p : u->partitions) {
        seen.insert(p);
        ++count;
        EXPECT_EQ(ch[p], u->engine);
      }
      if (u->engine == F) {
        EXPECT_LE(u->partitions.size(), c.k);
        for (std::size_t j = 1; j < u->partitions.size(); ++j)
          EXPECT_EQ(u->partitions[j], u->partitions[j - 1] + 1);
      }
    }
    EXPECT_EQ(count, seen.size());
    std::set<std::size_t> active;
    for (std::size_t i = 0; i < 40; ++i)
      if (act[i].active()) active.insert(i);
    EXPECT_EQ(seen, active);
    EXPECT_EQ(plan.filter_tasks.size(), expected_filter_units(ch, c.k));
  }
}

TEST(BuildPlan, RttScalingLeavesPlanStructureUnchanged) {
  std::mt19937_64 rng(33);
  auto g = CsrGraph::from_edges(2000, oracle::random_edges(2000, 30000, rng), true, false);
  auto t = partition_chunked(g, 4096);
  for (int trial = 0; trial < 20; ++trial) {
    FrontierState fr(2000);
    const auto density = 1 + rng() % 100;
    for (VertexId v = 0; v < 2000; ++v)
      if (rng() % 100 < density) fr.active.set(v);
    CostModelConfig a, b;
    b.rtt = 1e-3 * (1 + rng() % 100000);
    auto aa = compute_activity(g, t, fr, a);
    auto ca = select_engines(aa, a);
    auto cb = select_engines(compute_activity(g, t, fr, b), b);
    EXPECT_EQ(ca, cb);
    auto pa = build_plan(ca, aa, t, a), pb = build_plan(cb, aa, t, b);
    EXPECT_EQ(filter_units(pa), filter_units(pb));
  }
}

TEST(EngineMode, Parse) {
  EXPECT_EQ(parse_engine_mode("hybrid"), EngineMode::Hybrid);
  EXPECT_EQ(parse_engine_mode("zerocopy"), EngineMode::ZeroCopy);
  EXPECT_EQ(to_string(EngineMode::Compaction), "compaction");
  EXPECT_THROW(parse_engine_mode("um"), ConfigError);
}

}  // namespace
}  // namespace hxsim
