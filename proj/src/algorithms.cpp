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

#include "hxsim/algorithms.hpp"

#include <string>

namespace hxsim {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Sssp: return "sssp";
    case Algorithm::Bfs: return "bfs";
    case Algorithm::Cc: return "cc";
    case Algorithm::PageRank: return "pr";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view s) {
  if (s == "sssp") return Algorithm::Sssp;
  if (s == "bfs") return Algorithm::Bfs;
  if (s == "cc") return Algorithm::Cc;
  if (s == "pr" || s == "pagerank") return Algorithm::PageRank;
  throw ConfigError("unknown algorithm '" + std::string(s) + "'");
}

void MinPropagation::begin_iteration(bool synchronous) {
  synchronous_ = synchronous;
  if (synchronous) snapshot_ = values_;
}

void MinPropagation::push(VertexId u, std::span<const VertexId> neighbors,
                          std::span<const Weight> weights, Bitmap& changed) {
  const std::uint64_t src = synchronous_ ? snapshot_[u] : values_[u];
  if (src == kUnreached) return;
  for (std::size_t e = 0; e < neighbors.size(); ++e) {
    const VertexId v = neighbors[e];
    const std::uint64_t cand = candidate(src, weights.empty() ? Weight{1} : weights[e]);
    if (cand < values_[v]) {
      values_[v] = cand;
      changed.set(v);
    }
  }
}

Sssp::Sssp(VertexId n, VertexId source) : MinPropagation(n), source_(source) {
  if (source >= n) throw ConfigError("source vertex out of range");
}

void Sssp::initialize(Bitmap& active) {
  std::fill(values_.begin(), values_.end(), kUnreached);
  values_[source_] = 0;
  active.set(source_);
}

Bfs::Bfs(VertexId n, VertexId source) : MinPropagation(n), source_(source) {
  if (source >= n) throw ConfigError("source vertex out of range");
}

void Bfs::initialize(Bitmap& active) {
  std::fill(values_.begin(), values_.end(), kUnreached);
  values_[source_] = 0;
  active.set(source_);
}

void ConnectedComponents::initialize(Bitmap& active) {
  for (VertexId v = 0; v < values_.size(); ++v) {
    values_[v] = v;
    active.set(v);
  }
}

DeltaPageRank::DeltaPageRank(const CsrGraph& g, double damping, double epsilon)
    : damping_(damping), epsilon_(epsilon), rank_(g.num_vertices()), delta_(g.num_vertices()),
      incoming_(g.num_vertices()) {
  if (!(damping > 0.0 && damping < 1.0)) throw ConfigError("damping must lie in (0, 1)");
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
}

void DeltaPageRank::initialize(Bitmap& active) {
  std::fill(rank_.begin(), rank_.end(), 0.0);
  std::fill(delta_.begin(), delta_.end(), 1.0 - damping_);
  std::fill(incoming_.begin(), incoming_.end(), 0.0);
  if (1.0 - damping_ >= epsilon_) {
    for (VertexId v = 0; v < rank_.size(); ++v) active.set(v);
  }
}

void DeltaPageRank::begin_iteration(bool synchronous) { synchronous_ = synchronous; }

void DeltaPageRank::push(VertexId u, std::span<const VertexId> neighbors, std::span<const Weight>,
                         Bitmap& changed) {
  const double amount = delta_[u];
  delta_[u] = 0.0;
  rank_[u] += amount;
  if (neighbors.empty()) return;
  const double share = damping_ * amount / static_cast<double>(neighbors.size());
  auto& target = synchronous_ ? incoming_ : delta_;
  for (VertexId v : neighbors) {
    target[v] += share;
    if (!synchronous_ && target[v] >= epsilon_) changed.set(v);
  }
}

void DeltaPageRank::end_iteration(Bitmap& next) {
  if (!synchronous_) return;
  for (VertexId v = 0; v < rank_.size(); ++v) {
    if (incoming_[v] == 0.0) continue;
    delta_[v] += incoming_[v];
    incoming_[v] = 0.0;
    if (delta_[v] >= epsilon_) next.set(v);
  }
}

std::unique_ptr<VertexProgram> make_program(Algorithm a, const CsrGraph& g, const AlgorithmParams& params) {
  switch (a) {
    case Algorithm::Sssp: return std::make_unique<Sssp>(g.num_vertices(), params.source);
    case Algorithm::Bfs: return std::make_unique<Bfs>(g.num_vertices(), params.source);
    case Algorithm::Cc:
      if (!g.symmetric()) throw ConfigError("cc requires an undirected (symmetrized) graph");
      return std::make_unique<ConnectedComponents>(g.num_vertices());
    case Algorithm::PageRank: return std::make_unique<DeltaPageRank>(g, params.damping, params.epsilon);
  }
  throw ConfigError("unknown algorithm");
}

}  // namespace hxsim
