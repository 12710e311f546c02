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

#ifndef HXSIM_PARTITION_HPP
#define HXSIM_PARTITION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hxsim/graph.hpp"

namespace hxsim {

inline constexpr double kDefaultHubFraction = 0.08;
inline constexpr std::uint64_t kDefaultPartitionBytes = 32ULL << 20;

/// H(v) = D_o(v) * D_i(v) / (D_omax * D_imax); zero on an edgeless graph.
std::vector<double> hub_scores(const DegreeStats& stats);

/// Number of hub slots for a fraction of n: ceil(fraction * n), with products
/// that land within rounding noise of an integer taken as that integer.
VertexId hub_count(double hub_fraction, VertexId n);

struct HubSortResult {
  CsrGraph graph;
  std::vector<VertexId> permutation;  // old id -> new id
  VertexId hubs = 0;
};

/// Moves the top ceil(fraction * n) vertices by hub score to ids 0..h-1 in
/// descending score order (ties: lower original id first); every other vertex
/// keeps its relative order. Neighbour order within each list is preserved.
HubSortResult hub_sort(const CsrGraph& g, const DegreeStats& stats,
                       double hub_fraction = kDefaultHubFraction);

/// Relabels g so that old vertex v becomes permutation[v].
CsrGraph relabel(const CsrGraph& g, std::span<const VertexId> permutation);

struct PartitionRange {
  VertexId begin = 0;
  VertexId end = 0;  // exclusive
  VertexId size() const { return end - begin; }
  bool operator==(const PartitionRange&) const = default;
};

/// Contiguous edge-balanced vertex ranges; the unit of per-iteration cost
/// analysis.
struct PartitionTable {
  std::vector<PartitionRange> ranges;
  std::vector<EdgeIndex> edge_counts;
  std::vector<std::uint64_t> byte_counts;
  std::uint64_t target_bytes = kDefaultPartitionBytes;

  std::size_t size() const { return ranges.size(); }
  std::size_t partition_of(VertexId v) const;
  bool operator==(const PartitionTable&) const = default;
};

/// Greedy sweep in id order. A partition closes when the next vertex would push
/// it past target_bytes, unless it is still empty; a lone vertex larger than
/// the target therefore gets a partition of its own. Bytes count the neighbour
/// array plus the weight array when the graph is weighted.
PartitionTable partition_chunked(const CsrGraph& g, std::uint64_t target_bytes = kDefaultPartitionBytes);

/// Rebuilds a table from its boundary list [b0=0, b1, ..., bN=n].
PartitionTable partition_from_boundaries(const CsrGraph& g, std::span<const std::uint64_t> boundaries,
                                         std::uint64_t target_bytes);
std::vector<std::uint64_t> partition_boundaries(const PartitionTable& table);

}  // namespace hxsim

#endif  // HXSIM_PARTITION_HPP
