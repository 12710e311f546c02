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

#ifndef HXSIM_ALGORITHMS_HPP
#define HXSIM_ALGORITHMS_HPP

#include <limits>
#include <memory>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "hxsim/frontier.hpp"
#include "hxsim/graph.hpp"

namespace hxsim {

enum class Algorithm : std::uint8_t { Sssp, Bfs, Cc, PageRank };

std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view s);

enum class MergeOp : std::uint8_t { Min, Sum };

inline constexpr std::uint64_t kUnreached = std::numeric_limits<std::uint64_t>::max();

struct AlgorithmParams {
  VertexId source = 0;
  double damping = 0.85;
  double epsilon = 1e-9;
};

/// Integer states (distances, levels, labels) or PageRank ranks.
using ResultArray = std::variant<std::vector<std::uint64_t>, std::vector<double>>;

/// Push-based vertex program and the per-vertex state it owns. The executor
/// calls push() for each vertex it schedules; the program marks every
/// neighbour whose state changed in the bitmap it is handed.
class VertexProgram {
 public:
  virtual ~VertexProgram() = default;

  virtual Algorithm algorithm() const = 0;
  virtual MergeOp merge_op() const = 0;
  virtual bool uses_weights() const { return false; }
  /// Accumulative programs carry residuals and admit delta-driven priority.
  virtual bool accumulative() const { return false; }

  virtual VertexId num_vertices() const = 0;

  /// Resets state and marks the initial frontier.
  virtual void initialize(Bitmap& active) = 0;

  /// A synchronous iteration reads the state as of this call; an asynchronous
  /// one reads live values.
  virtual void begin_iteration(bool synchronous) = 0;

  virtual void push(VertexId u, std::span<const VertexId> neighbors, std::span<const Weight> weights,
                    Bitmap& changed) = 0;

  /// Applies deferred synchronous updates and marks the vertices they activate.
  virtual void end_iteration(Bitmap& /*next*/) {}

  /// Pending residual |delta(v)|; zero for non-accumulative programs.
  virtual double residual(VertexId /*v*/) const { return 0.0; }

  virtual ResultArray result() const = 0;
};

/// Shared machinery of SSSP, BFS and CC: monotone min-propagation over u64.
class MinPropagation : public VertexProgram {
 public:
  explicit MinPropagation(VertexId n) : values_(n, kUnreached) {}

  MergeOp merge_op() const override { return MergeOp::Min; }
  VertexId num_vertices() const override { return values_.size(); }
  void begin_iteration(bool synchronous) override;
  void push(VertexId u, std::span<const VertexId> neighbors, std::span<const Weight> weights,
            Bitmap& changed) override;
  ResultArray result() const override { return values_; }

  std::span<const std::uint64_t> values() const { return values_; }

 protected:
  /// Candidate for a neighbour reached from a vertex holding `value`.
  virtual std::uint64_t candidate(std::uint64_t value, Weight w) const = 0;

  std::vector<std::uint64_t> values_;
  std::vector<std::uint64_t> snapshot_;
  bool synchronous_ = false;
};

class Sssp final : public MinPropagation {
 public:
  Sssp(VertexId n, VertexId source);
  Algorithm algorithm() const override { return Algorithm::Sssp; }
  bool uses_weights() const override { return true; }
  void initialize(Bitmap& active) override;

  static std::uint64_t relax(std::uint64_t dist, Weight w) { return dist + w; }

 protected:
  std::uint64_t candidate(std::uint64_t value, Weight w) const override { return relax(value, w); }

 private:
  VertexId source_;
};

class Bfs final : public MinPropagation {
 public:
  Bfs(VertexId n, VertexId source);
  Algorithm algorithm() const override { return Algorithm::Bfs; }
  void initialize(Bitmap& active) override;

 protected:
  std::uint64_t candidate(std::uint64_t level, Weight) const override { return level + 1; }

 private:
  VertexId source_;
};

/// Min-label propagation; expects a symmetric adjacency.
class ConnectedComponents final : public MinPropagation {
 public:
  explicit ConnectedComponents(VertexId n) : MinPropagation(n) {}
  Algorithm algorithm() const override { return Algorithm::Cc; }
  void initialize(Bitmap& active) override;

 protected:
  std::uint64_t candidate(std::uint64_t label, Weight) const override { return label; }
};

/// Residual (delta) PageRank. Every vertex starts with rank 0 and residual
/// 1-d. Processing u absorbs its residual into its rank and sends
/// d*residual/D_o(u) to each out-neighbour; a vertex is active while its
/// residual is at least epsilon. Zero out-degree vertices absorb and emit
/// nothing.
class DeltaPageRank final : public VertexProgram {
 public:
  DeltaPageRank(const CsrGraph& g, double damping, double epsilon);

  Algorithm algorithm() const override { return Algorithm::PageRank; }
  MergeOp merge_op() const override { return MergeOp::Sum; }
  bool accumulative() const override { return true; }
  VertexId num_vertices() const override { return rank_.size(); }
  void initialize(Bitmap& active) override;
  void begin_iteration(bool synchronous) override;
  void push(VertexId u, std::span<const VertexId> neighbors, std::span<const Weight> weights,
            Bitmap& changed) override;
  void end_iteration(Bitmap& next) override;
  double residual(VertexId v) const override { return delta_[v] + incoming_[v]; }
  ResultArray result() const override { return rank_; }

  std::span<const double> ranks() const { return rank_; }
  std::span<const double> deltas() const { return delta_; }
  double damping() const { return damping_; }

 private:
  double damping_;
  double epsilon_;
  std::vector<double> rank_;
  std::vector<double> delta_;
  std::vector<double> incoming_;  // synchronous-mode messages for the next iteration
  bool synchronous_ = false;
};

std::unique_ptr<VertexProgram> make_program(Algorithm a, const CsrGraph& g, const AlgorithmParams& params);

}  // namespace hxsim

#endif  // HXSIM_ALGORITHMS_HPP
