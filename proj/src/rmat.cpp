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

#include "hxsim/rmat.hpp"

#include <bit>
#include <cmath>
#include <ostream>
#include <random>

namespace hxsim {

std::vector<Edge> rmat_generate(const RmatParams& p) {
  if (p.a < 0 || p.b < 0 || p.c < 0 || p.d < 0 || std::abs(p.a + p.b + p.c + p.d - 1.0) > 1e-9)
    throw ConfigError("rmat probabilities must be non-negative and sum to 1");
  if (p.num_edges > 0 && p.num_vertices == 0) throw ConfigError("rmat needs at least one vertex");

  std::vector<Edge> edges;
  edges.reserve(p.num_edges);
  if (p.num_edges == 0) return edges;

  const int levels = p.num_vertices <= 1 ? 0 : std::bit_width(p.num_vertices - 1);
  std::mt19937_64 rng(p.seed);
  // 53 random bits -> [0, 1); independent of the library's distributions.
  auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const double ab = p.a + p.b;
  const double abc = ab + p.c;

  while (edges.size() < p.num_edges) {
    VertexId src = 0, dst = 0;
    for (int level = 0; level < levels; ++level) {
      const double r = uniform();
      src <<= 1;
      dst <<= 1;
      if (r < p.a) {
      } else if (r < ab) {
        dst |= 1;
      } else if (r < abc) {
        src |= 1;
      } else {
        src |= 1;
        dst |= 1;
      }
    }
    if (src < p.num_vertices && dst < p.num_vertices) edges.push_back({src, dst, 1});
  }
  return edges;
}

void write_edge_list(std::ostream& out, std::span<const Edge> edges, bool weighted) {
  for (const Edge& e : edges) {
    out << e.src << ' ' << e.dst;
    if (weighted) out << ' ' << e.weight;
    out << '\n';
  }
}

}  // namespace hxsim
