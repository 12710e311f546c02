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

#ifndef HXSIM_GRAPH_HPP
#define HXSIM_GRAPH_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hxsim {

using VertexId = std::uint64_t;
using EdgeIndex = std::uint64_t;
using Weight = std::uint32_t;

inline constexpr std::size_t kWeightBytes = sizeof(Weight);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Malformed or incompatible binary file.
class FormatError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Internal invariant violated at run time (plan does not match frontier, ...).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

enum class IdWidth : std::uint8_t { k32 = 4, k64 = 8 };

inline std::size_t id_bytes(IdWidth w) { return static_cast<std::size_t>(w); }
inline std::uint64_t max_id(IdWidth w) {
  return w == IdWidth::k32 ? 0xffffffffULL : ~0ULL;
}

struct Edge {
  VertexId src = 0;
  VertexId dst = 0;
  Weight weight = 1;
};

/// Immutable compressed-sparse-row graph. The neighbour array of vertex v is
/// neighbors[offsets[v] .. offsets[v+1]); weights, when present, are parallel
/// to neighbors. The id width only affects the modelled edge-entry size and
/// the on-disk encoding; ids are held as 64-bit values in memory.
class CsrGraph {
 public:
  CsrGraph();

  /// Validates every CSR invariant and throws FormatError on violation.
  CsrGraph(std::vector<EdgeIndex> offsets, std::vector<VertexId> neighbors,
           std::optional<std::vector<Weight>> weights = std::nullopt,
           IdWidth width = IdWidth::k32, bool symmetric = false);

  /// Builds a CSR over vertices [0, n). Per-source edge order follows input
  /// order. Undirected input stores every edge in both directions.
  static CsrGraph from_edges(VertexId n, std::span<const Edge> edges,
                             bool directed, bool weighted,
                             IdWidth width = IdWidth::k32);

  VertexId num_vertices() const { return offsets_.size() - 1; }
  EdgeIndex num_edges() const { return neighbors_.size(); }
  bool weighted() const { return weighted_; }
  bool symmetric() const { return symmetric_; }
  IdWidth id_width() const { return width_; }

  std::span<const EdgeIndex> offsets() const { return offsets_; }
  std::span<const VertexId> neighbors() const { return neighbors_; }
  std::span<const Weight> weights() const { return weights_; }

  EdgeIndex out_degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const VertexId> neighbors_of(VertexId v) const {
    return std::span<const VertexId>(neighbors_).subspan(offsets_[v], out_degree(v));
  }
  std::span<const Weight> weights_of(VertexId v) const {
    if (!weighted_) return {};
    return std::span<const Weight>(weights_).subspan(offsets_[v], out_degree(v));
  }

  /// Bytes of one edge-array entry: the id, plus the weight when `with_weights`.
  std::size_t edge_entry_bytes(bool with_weights) const {
    return id_bytes(width_) + (with_weights && weighted() ? kWeightBytes : 0);
  }

  /// Copy of this graph carrying the given weights (size must equal num_edges).
  CsrGraph with_weights(std::vector<Weight> weights) const;

  bool operator==(const CsrGraph& other) const = default;

 private:
  std::vector<EdgeIndex> offsets_;
  std::vector<VertexId> neighbors_;
  std::vector<Weight> weights_;
  IdWidth width_ = IdWidth::k32;
  bool symmetric_ = false;
  bool weighted_ = false;
};

struct DegreeStats {
  std::vector<EdgeIndex> in_degree;
  std::vector<EdgeIndex> out_degree;
  EdgeIndex d_imax = 0;
  EdgeIndex d_omax = 0;
};

DegreeStats compute_degree_stats(const CsrGraph& g);

struct LoadOptions {
  bool directed = true;
  bool weighted = false;
  IdWidth width = IdWidth::k32;
};

/// A graph ingested from text together with the dense-id -> original-id map.
struct IngestedGraph {
  CsrGraph graph;
  std::vector<std::uint64_t> original_ids;
};

/// Parses "src dst [w]" lines; blank and '#' lines are skipped. Original ids
/// are compacted to 0..n-1 preserving their numeric order.
IngestedGraph parse_edge_list(std::istream& in, const LoadOptions& opts);
IngestedGraph load_edge_list(const std::filesystem::path& path, const LoadOptions& opts);

/// Deterministic SSSP weights for unweighted inputs: (src + dst) mod 64 + 1.
Weight synthesized_weight(VertexId src, VertexId dst);
CsrGraph synthesize_weights(const CsrGraph& g);

// Binary CSR container (little-endian, magic "HYTG").
inline constexpr std::uint32_t kCsrFormatVersion = 1;
inline constexpr std::uint32_t kFlagWeighted = 1u << 0;
inline constexpr std::uint32_t kFlagWideIds = 1u << 1;
inline constexpr std::uint32_t kFlagSymmetric = 1u << 2;

std::vector<std::uint8_t> encode_binary_csr(const CsrGraph& g);
CsrGraph decode_binary_csr(std::span<const std::uint8_t> bytes);
void write_binary_csr(const CsrGraph& g, const std::filesystem::path& path);
CsrGraph read_binary_csr(const std::filesystem::path& path);

/// True when the file starts with the binary CSR magic.
bool is_binary_csr(const std::filesystem::path& path);

// Sidecar arrays (id maps, permutations, result arrays): u64 count followed by
// the values, little-endian.
void write_u64_array(std::span<const std::uint64_t> values, const std::filesystem::path& path);
std::vector<std::uint64_t> read_u64_array(const std::filesystem::path& path);
void write_f64_array(std::span<const double> values, const std::filesystem::path& path);

}  // namespace hxsim

#endif  // HXSIM_GRAPH_HPP
