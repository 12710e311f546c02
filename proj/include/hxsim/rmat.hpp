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

#ifndef HXSIM_RMAT_HPP
#define HXSIM_RMAT_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "hxsim/graph.hpp"

namespace hxsim {

struct RmatParams {
  VertexId num_vertices = 1024;
  EdgeIndex num_edges = 8192;
  std::uint64_t seed = 1;
  double a = 0.57;
  double b = 0.19;
  double c = 0.19;
  double d = 0.05;
};

/// Recursive-matrix edge generator over ceil(log2 n) levels. Edges whose
/// endpoints land outside [0, n) are redrawn. Deterministic for a fixed seed.
std::vector<Edge> rmat_generate(const RmatParams& params);

/// One "src dst" (or "src dst w") line per edge.
void write_edge_list(std::ostream& out, std::span<const Edge> edges, bool weighted);

}  // namespace hxsim

#endif  // HXSIM_RMAT_HPP
