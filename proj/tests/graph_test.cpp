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

#include <filesystem>
#include <random>
#include <sstream>

#include "hxsim/graph.hpp"
#include "hxsim/rmat.hpp"
#include "oracles.hpp"

namespace hxsim {
namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hxsim_graph_" + name);
}

IngestedGraph parse(const std::string& text, bool directed = true, bool weighted = false,
                    IdWidth width = IdWidth::k32) {
  std::istringstream in(text);
  return parse_edge_list(in, {directed, weighted, width});
}

TEST(EdgeList, DirectedChain) {
  auto g = parse("0 1\n1 2\n").graph;
  EXPECT_EQ(std::vector<EdgeIndex>(g.offsets().begin(), g.offsets().end()), (std::vector<EdgeIndex>{0, 1, 2, 2}));
  EXPECT_EQ(std::vector<VertexId>(g.neighbors().begin(), g.neighbors().end()), (std::vector<VertexId>{1, 2}));
  EXPECT_FALSE(g.symmetric());
}

TEST(EdgeList, UndirectedSymmetrizes) {
  auto g = parse("0 1\n", false).graph;
  EXPECT_EQ(std::vector<EdgeIndex>(g.offsets().begin(), g.offsets().end()), (std::vector<EdgeIndex>{0, 1, 2}));
  EXPECT_EQ(std::vector<VertexId>(g.neighbors().begin(), g.neighbors().end()), (std::vector<VertexId>{1, 0}));
  EXPECT_TRUE(g.symmetric());
}

TEST(EdgeList, CommentsBlankLinesAndWeights) {
  auto in = parse("# header\n\n  # indented comment\n0 1 7\n1 2 9\n", true, true);
  ASSERT_TRUE(in.graph.weighted());
  EXPECT_EQ(in.graph.weights_of(0)[0], 7u);
  EXPECT_EQ(in.graph.weights_of(1)[0], 9u);
}

TEST(EdgeList, GapsAreCompactedWithStableMap) {
  auto in = parse("10 500\n500 7\n");
  EXPECT_EQ(in.graph.num_vertices(), 3u);
  EXPECT_EQ(in.original_ids, (std::vector<std::uint64_t>{7, 10, 500}));
  // 10 -> 1, 500 -> 2, 7 -> 0
  EXPECT_EQ(in.graph.neighbors_of(1)[0], 2u);
  EXPECT_EQ(in.graph.neighbors_of(2)[0], 0u);
}

TEST(EdgeList, DuplicatesAndSelfLoopsKept) {
  auto g = parse("0 1\n0 1\n1 1\n").graph;
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(g.out_degree(0), 2u);
  EXPECT_EQ(g.neighbors_of(1)[0], 1u);
}

TEST(EdgeList, ParseErrorsCarryLineNumber) {
  try {
    parse("0 1\n1 x\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse("0 1 2 3\n"), ParseError);
  EXPECT_THROW(parse("0\n"), ParseError);
  EXPECT_THROW(parse("-1 2\n"), ParseError);
  EXPECT_THROW(parse("0 1\n", true, true), ParseError);
}

TEST(EdgeList, IdOverflowForWidth) {
  EXPECT_THROW(parse("0 4294967296\n"), ParseError);
  auto wide = parse("0 4294967296\n", true, false, IdWidth::k64);
  EXPECT_EQ(wide.graph.num_vertices(), 2u);
  EXPECT_EQ(wide.graph.id_width(), IdWidth::k64);
  EXPECT_EQ(wide.graph.edge_entry_bytes(false), 8u);
}

TEST(EdgeList, EmptyInput) {
  auto g = parse("# nothing\n").graph;
  EXPECT_EQ(g.num_vertices(), 0u);
  EXPECT_EQ(g.num_edges(), 0u);
}

TEST(CsrGraph, ConstructorRejectsMalformedArrays) {
  EXPECT_THROW(CsrGraph({1, 1}, {0}), FormatError);
  EXPECT_THROW(CsrGraph({0, 2, 1}, {0, 1}), FormatError);
  EXPECT_THROW(CsrGraph({0, 1}, {0, 1}), FormatError);
  EXPECT_THROW(CsrGraph({0, 1}, {5}), FormatError);
  EXPECT_THROW(CsrGraph({0, 1}, {0}, std::vector<Weight>{}), FormatError);
  EXPECT_THROW(CsrGraph({}, {}), FormatError);
  EXPECT_NO_THROW(CsrGraph({0, 1}, {0}, std::vector<Weight>{3}));
}

TEST(DegreeStats, Chain) {
  auto s = compute_degree_stats(parse("0 1\n1 2\n").graph);
  EXPECT_EQ(s.out_degree, (std::vector<EdgeIndex>{1, 1, 0}));
  EXPECT_EQ(s.in_degree, (std::vector<EdgeIndex>{0, 1, 1}));
  EXPECT_EQ(s.d_omax, 1u);
  EXPECT_EQ(s.d_imax, 1u);
}

TEST(DegreeStats, Star) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v <= 8; ++v) edges.push_back({0, v});
  auto s = compute_degree_stats(CsrGraph::from_edges(9, edges, true, false));
  EXPECT_EQ(s.out_degree[0], 8u);
  EXPECT_EQ(s.d_omax, 8u);
  EXPECT_EQ(s.d_imax, 1u);
}

TEST(DegreeStats, SumsMatchBruteForceCounts) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const VertexId n = 1 + rng() % 200;
    auto edges = oracle::random_edges(n, rng() % 1000, rng);
    auto g = CsrGraph::from_edges(n, edges, true, false);
    auto s = compute_degree_stats(g);
    std::vector<EdgeIndex> in(n, 0), out(n, 0);
    for (const auto& e : edges) {
      ++out[e.src];
      ++in[e.dst];
    }
    EXPECT_EQ(s.in_degree, in);
    EXPECT_EQ(s.out_degree, out);
    EXPECT_EQ(s.d_imax, n ? *std::max_element(in.begin(), in.end()) : 0);
    EXPECT_EQ(s.d_omax, n ? *std::max_element(out.begin(), out.end()) : 0);
  }
}

TEST(CsrGraph, UndirectedAdjacencyIsSymmetric) {
  std::mt19937_64 rng(12);
  auto edges = oracle::random_edges(50, 300, rng);
  auto g = CsrGraph::from_edges(50, edges, false, false);
  std::multiset<std::pair<VertexId, VertexId>> arcs;
  for (VertexId u = 0; u < g.num_vertices(); ++u)
    for (VertexId v : g.neighbors_of(u)) arcs.insert({u, v});
  for (auto [u, v] : arcs) EXPECT_EQ(arcs.count({u, v}), arcs.count({v, u}));
}

TEST(Weights, SynthesizedRule) {
  EXPECT_EQ(synthesized_weight(0, 0), 1u);
  EXPECT_EQ(synthesized_weight(63, 0), 64u);
  EXPECT_EQ(synthesized_weight(40, 30), 7u);
  auto g = synthesize_weights(parse("0 1\n1 2\n").graph);
  ASSERT_TRUE(g.weighted());
  EXPECT_EQ(g.weights_of(0)[0], 2u);
  EXPECT_EQ(g.weights_of(1)[0], 4u);
}

TEST(BinaryCsr, RoundTripsToyAndEmpty) {
  // 9 vertices, 128 edges
  std::vector<Edge> edges;
  const EdgeIndex degs[9] = {2, 4, 8, 16, 32, 2, 21, 21, 22};
  for (VertexId v = 0; v < 9; ++v)
    for (EdgeIndex i = 0; i < degs[v]; ++i) edges.push_back({v, (v + i) % 9});
  auto g = CsrGraph::from_edges(9, edges, true, false);
  EXPECT_EQ(g.num_edges(), 128u);
  EXPECT_EQ(decode_binary_csr(encode_binary_csr(g)), g);

  CsrGraph empty;
  auto back = decode_binary_csr(encode_binary_csr(empty));
  EXPECT_EQ(back.num_vertices(), 0u);
  EXPECT_EQ(back, empty);
}

TEST(BinaryCsr, FlagsSurvive) {
  std::vector<Edge> edges{{0, 1, 5}, {1, 2, 6}};
  for (IdWidth w : {IdWidth::k32, IdWidth::k64}) {
    auto g = CsrGraph::from_edges(3, edges, false, true, w);
    auto back = decode_binary_csr(encode_binary_csr(g));
    EXPECT_EQ(back, g);
    EXPECT_TRUE(back.weighted());
    EXPECT_TRUE(back.symmetric());
    EXPECT_EQ(back.id_width(), w);
  }
}

TEST(BinaryCsr, LargeRmatReserializesByteIdentically) {
  auto edges = rmat_generate({1 << 17, 1'000'000, 5});
  auto g = CsrGraph::from_edges(1 << 17, edges, true, false);
  const auto bytes = encode_binary_csr(g);
  EXPECT_EQ(encode_binary_csr(decode_binary_csr(bytes)), bytes);

  const auto path = temp_path("rmat.bin");
  write_binary_csr(g, path);
  EXPECT_TRUE(is_binary_csr(path));
  EXPECT_EQ(read_binary_csr(path), g);
  std::filesystem::remove(path);
}

TEST(BinaryCsr, LoadWriteReadWriteIsCanonical) {
  auto g = parse("3 1 4\n1 5 9\n2 6 5\n3 5 8\n", false, true).graph;
  auto first = encode_binary_csr(g);
  auto second = encode_binary_csr(decode_binary_csr(first));
  EXPECT_EQ(first, second);
}

TEST(BinaryCsr, RejectsCorruptInput) {
  auto g = parse("0 1\n1 2\n").graph;
  auto bytes = encode_binary_csr(g);

  auto truncated = bytes;
  truncated.pop_back();
  EXPECT_THROW(decode_binary_csr(truncated), FormatError);

  auto trailing = bytes;
  trailing.push_back(0);
  EXPECT_THROW(decode_binary_csr(trailing), FormatError);

  auto bad_magic = bytes;
  bad_magic[0] = 'X';
  EXPECT_THROW(decode_binary_csr(bad_magic), FormatError);

  auto bad_version = bytes;
  bad_version[4] = 99;
  EXPECT_THROW(decode_binary_csr(bad_version), FormatError);

  auto header_only = std::vector<std::uint8_t>(bytes.begin(), bytes.begin() + 10);
  EXPECT_THROW(decode_binary_csr(header_only), FormatError);

  // neighbor id out of range
  auto bad_neighbor = bytes;
  bad_neighbor[bad_neighbor.size() - 4] = 77;
  EXPECT_THROW(decode_binary_csr(bad_neighbor), FormatError);
}

TEST(BinaryCsr, SidecarArrays) {
  const auto path = temp_path("ids.bin");
  std::vector<std::uint64_t> ids{5, 0, 1ULL << 40};
  write_u64_array(ids, path);
  EXPECT_EQ(read_u64_array(path), ids);
  EXPECT_FALSE(is_binary_csr(path));
  std::filesystem::remove(path);
  EXPECT_THROW(read_u64_array(path), Error);
}

}  // namespace
}  // namespace hxsim
