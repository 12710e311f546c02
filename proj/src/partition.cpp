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

#include "hxsim/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hxsim {

std::vector<double> hub_scores(const DegreeStats& stats) {
  const double denom = static_cast<double>(stats.d_omax) * static_cast<double>(stats.d_imax);
  std::vector<double> h(stats.out_degree.size(), 0.0);
  if (denom == 0.0) return h;
  for (std::size_t v = 0; v < h.size(); ++v)
    h[v] = static_cast<double>(stats.out_degree[v]) * static_cast<double>(stats.in_degree[v]) / denom;
  return h;
}

VertexId hub_count(double hub_fraction, VertexId n) {
  if (!(hub_fraction >= 0.0 && hub_fraction <= 1.0))
    throw ConfigError("hub fraction must lie in [0, 1]");
  const double x = hub_fraction * static_cast<double>(n);
  const double r = std::round(x);
  const double h = std::abs(x - r) <= 1e-9 * std::max(1.0, x) ? r : std::ceil(x);
  return std::min<VertexId>(n, static_cast<VertexId>(h));
}

CsrGraph relabel(const CsrGraph& g, std::span<const VertexId> permutation) {
  const VertexId n = g.num_vertices();
  std::vector<VertexId> inverse(n);
  for (VertexId v = 0; v < n; ++v) inverse[permutation[v]] = v;

  std::vector<EdgeIndex> offsets(n + 1, 0);
  for (VertexId i = 0; i < n; ++i) offsets[i + 1] = offsets[i] + g.out_degree(inverse[i]);
  std::vector<VertexId> neighbors(g.num_edges());
  std::optional<std::vector<Weight>> weights;
  if (g.weighted()) weights.emplace(g.num_edges());
  for (VertexId i = 0; i < n; ++i) {
    const VertexId old = inverse[i];
    auto nbrs = g.neighbors_of(old);
    std::transform(nbrs.begin(), nbrs.end(), neighbors.begin() + offsets[i],
                   [&](VertexId u) { return permutation[u]; });
    if (weights) std::ranges::copy(g.weights_of(old), weights->begin() + offsets[i]);
  }
  return CsrGraph(std::move(offsets), std::move(neighbors), std::move(weights), g.id_width(),
                  g.symmetric());
}

HubSortResult hub_sort(const CsrGraph& g, const DegreeStats& stats, double hub_fraction) {
  const VertexId n = g.num_vertices();
  const VertexId h = hub_count(hub_fraction, n);

  // Ranking on the integer product D_o * D_i orders exactly as H(v) does.
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  auto key = [&](VertexId v) { return stats.out_degree[v] * stats.in_degree[v]; };
  std::partial_sort(order.begin(), order.begin() + h, order.end(), [&](VertexId a, VertexId b) {
    const auto ka = key(a), kb = key(b);
    return ka != kb ? ka > kb : a < b;
  });

  HubSortResult out;
  out.hubs = h;
  out.permutation.assign(n, 0);
  std::vector<bool> is_hub(n, false);
  for (VertexId i = 0; i < h; ++i) {
    out.permutation[order[i]] = i;
    is_hub[order[i]] = true;
  }
  VertexId next = h;
  for (VertexId v = 0; v < n; ++v) {
    if (!is_hub[v]) out.permutation[v] = next++;
  }
  out.graph = relabel(g, out.permutation);
  return out;
}

std::size_t PartitionTable::partition_of(VertexId v) const {
  auto it = std::upper_bound(ranges.begin(), ranges.end(), v,
                             [](VertexId x, const PartitionRange& r) { return x < r.end; });
  return static_cast<std::size_t>(it - ranges.begin());
}

namespace {

std::uint64_t partition_entry_bytes(const CsrGraph& g) {
  return id_bytes(g.id_width()) + (g.weighted() ? kWeightBytes : 0);
}

void append_range(PartitionTable& t, const CsrGraph& g, VertexId begin, VertexId end) {
  const EdgeIndex edges = g.offsets()[end] - g.offsets()[begin];
  t.ranges.push_back({begin, end});
  t.edge_counts.push_back(edges);
  t.byte_counts.push_back(edges * partition_entry_bytes(g));
}

}  // namespace

PartitionTable partition_chunked(const CsrGraph& g, std::uint64_t target_bytes) {
  if (target_bytes == 0) throw ConfigError("partition size must be positive");
  PartitionTable t;
  t.target_bytes = target_bytes;
  const VertexId n = g.num_vertices();
  const std::uint64_t entry = partition_entry_bytes(g);
  VertexId begin = 0;
  std::uint64_t bytes = 0;
  for (VertexId v = 0; v < n; ++v) {
    const std::uint64_t vb = g.out_degree(v) * entry;
    if (v > begin && bytes + vb > target_bytes) {
      append_range(t, g, begin, v);
      begin = v;
      bytes = 0;
    }
    bytes += vb;
  }
  if (n > begin) append_range(t, g, begin, n);
  return t;
}

PartitionTable partition_from_boundaries(const CsrGraph& g, std::span<const std::uint64_t> boundaries,
                                         std::uint64_t target_bytes) {
  const VertexId n = g.num_vertices();
  if (boundaries.empty() || boundaries.front() != 0 || boundaries.back() != n)
    throw FormatError("partition boundaries must start at 0 and end at num_vertices");
  PartitionTable t;
  t.target_bytes = target_bytes;
  for (std::size_t i = 1; i < boundaries.size(); ++i) {
    if (boundaries[i] <= boundaries[i - 1]) throw FormatError("partition boundaries must increase");
    append_range(t, g, boundaries[i - 1], boundaries[i]);
  }
  return t;
}

std::vector<std::uint64_t> partition_boundaries(const PartitionTable& table) {
  std::vector<std::uint64_t> b{0};
  for (const auto& r : table.ranges) b.push_back(r.end);
  return b;
}

}  // namespace hxsim
