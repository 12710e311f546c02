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

#include "hxsim/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <sstream>

namespace hxsim {

CsrGraph::CsrGraph() : offsets_{0} {}

CsrGraph::CsrGraph(std::vector<EdgeIndex> offsets, std::vector<VertexId> neighbors,
                   std::optional<std::vector<Weight>> weights, IdWidth width,
                   bool symmetric)
    : offsets_(std::move(offsets)),
      neighbors_(std::move(neighbors)),
      width_(width),
      symmetric_(symmetric),
      weighted_(weights.has_value()) {
  if (weights) weights_ = std::move(*weights);
  if (offsets_.empty()) throw FormatError("offsets must hold num_vertices+1 entries");
  if (offsets_.front() != 0) throw FormatError("offsets[0] must be 0");
  if (offsets_.back() != neighbors_.size())
    throw FormatError("offsets[num_vertices] must equal num_edges");
  for (std::size_t i = 1; i < offsets_.size(); ++i) {
    if (offsets_[i] < offsets_[i - 1]) throw FormatError("offsets must be non-decreasing");
  }
  const VertexId n = num_vertices();
  const std::uint64_t limit = max_id(width_);
  if (n > 0 && n - 1 > limit) throw FormatError("vertex count overflows the id width");
  for (VertexId u : neighbors_) {
    if (u >= n) throw FormatError("neighbor id out of range");
  }
  if (weighted_ && weights_.size() != neighbors_.size())
    throw FormatError("weights length must equal num_edges");
}

CsrGraph CsrGraph::from_edges(VertexId n, std::span<const Edge> edges, bool directed,
                              bool weighted, IdWidth width) {
  std::vector<EdgeIndex> offsets(n + 1, 0);
  for (const Edge& e : edges) {
    if (e.src >= n || e.dst >= n) throw FormatError("edge endpoint out of range");
    ++offsets[e.src + 1];
    if (!directed) ++offsets[e.dst + 1];
  }
  for (VertexId v = 0; v < n; ++v) offsets[v + 1] += offsets[v];

  std::vector<EdgeIndex> cursor(offsets.begin(), offsets.end() - 1);
  std::vector<VertexId> neighbors(offsets.back());
  std::vector<Weight> weights(weighted ? offsets.back() : 0);
  auto place = [&](VertexId s, VertexId d, Weight w) {
    EdgeIndex pos = cursor[s]++;
    neighbors[pos] = d;
    if (weighted) weights[pos] = w;
  };
  for (const Edge& e : edges) {
    place(e.src, e.dst, e.weight);
    if (!directed) place(e.dst, e.src, e.weight);
  }
  std::optional<std::vector<Weight>> w;
  if (weighted) w = std::move(weights);
  return CsrGraph(std::move(offsets), std::move(neighbors), std::move(w), width, !directed);
}

CsrGraph CsrGraph::with_weights(std::vector<Weight> weights) const {
  return CsrGraph(offsets_, neighbors_, std::move(weights), width_, symmetric_);
}

DegreeStats compute_degree_stats(const CsrGraph& g) {
  DegreeStats s;
  const VertexId n = g.num_vertices();
  s.in_degree.assign(n, 0);
  s.out_degree.assign(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    s.out_degree[v] = g.out_degree(v);
    s.d_omax = std::max(s.d_omax, s.out_degree[v]);
  }
  for (VertexId u : g.neighbors()) ++s.in_degree[u];
  for (EdgeIndex d : s.in_degree) s.d_imax = std::max(s.d_imax, d);
  return s;
}

namespace {

bool parse_u64(std::string_view field, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

}  // namespace

IngestedGraph parse_edge_list(std::istream& in, const LoadOptions& opts) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t lineno = 0;
  const std::uint64_t limit = max_id(opts.width);
  while (std::getline(in, line)) {
    ++lineno;
    auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == '#') continue;
    if (fields.size() < 2 || fields.size() > 3)
      throw ParseError(lineno, "expected \"src dst\" or \"src dst w\"");
    if (opts.weighted && fields.size() != 3) throw ParseError(lineno, "missing edge weight");
    Edge e;
    if (!parse_u64(fields[0], e.src) || !parse_u64(fields[1], e.dst))
      throw ParseError(lineno, "vertex ids must be non-negative integers");
    if (e.src > limit || e.dst > limit)
      throw ParseError(lineno, "vertex id overflows the configured id width");
    if (fields.size() == 3) {
      std::uint64_t w = 0;
      if (!parse_u64(fields[2], w) || w > 0xffffffffULL)
        throw ParseError(lineno, "weight must be a non-negative 32-bit integer");
      e.weight = static_cast<Weight>(w);
    }
    edges.push_back(e);
  }

  std::vector<std::uint64_t> ids;
  ids.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    ids.push_back(e.src);
    ids.push_back(e.dst);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto dense = [&](std::uint64_t raw) {
    return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), raw) - ids.begin());
  };
  for (Edge& e : edges) {
    e.src = dense(e.src);
    e.dst = dense(e.dst);
  }
  IngestedGraph out{CsrGraph::from_edges(ids.size(), edges, opts.directed, opts.weighted, opts.width),
                    std::move(ids)};
  return out;
}

IngestedGraph load_edge_list(const std::filesystem::path& path, const LoadOptions& opts) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse_edge_list(in, opts);
}

Weight synthesized_weight(VertexId src, VertexId dst) {
  return static_cast<Weight>((src + dst) % 64 + 1);
}

CsrGraph synthesize_weights(const CsrGraph& g) {
  std::vector<Weight> w(g.num_edges());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (EdgeIndex e = g.offsets()[v]; e < g.offsets()[v + 1]; ++e)
      w[e] = synthesized_weight(v, g.neighbors()[e]);
  }
  return g.with_weights(std::move(w));
}

namespace {

class ByteWriter {
 public:
  void u32(std::uint32_t v) { put(v, 4); }
  void u64(std::uint64_t v) { put(v, 8); }
  void raw(std::string_view s) { buf_.insert(buf_.end(), s.begin(), s.end()); }
  std::vector<std::uint8_t> take() { return std::move(buf_); }
  void reserve(std::size_t n) { buf_.reserve(n); }

 private:
  void put(std::uint64_t v, int width) {
    for (int i = 0; i < width; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  std::vector<std::uint8_t> buf_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}
  std::uint32_t u32() { return static_cast<std::uint32_t>(get(4)); }
  std::uint64_t u64() { return get(8); }
  std::uint64_t uint(int width) { return get(width); }
  std::string_view raw(std::size_t n) {
    need(n);
    std::string_view s(reinterpret_cast<const char*>(bytes_.data() + pos_), n);
    pos_ += n;
    return s;
  }
  std::size_t remaining() const { return bytes_.size() - pos_; }
  void need(std::size_t n) const {
    if (remaining() < n) throw FormatError("truncated file");
  }

 private:
  std::uint64_t get(int width) {
    need(width);
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v |= std::uint64_t{bytes_[pos_ + i]} << (8 * i);
    pos_ += width;
    return v;
  }
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace

std::vector<std::uint8_t> encode_binary_csr(const CsrGraph& g) {
  const int id_width = static_cast<int>(id_bytes(g.id_width()));
  std::uint32_t flags = 0;
  if (g.weighted()) flags |= kFlagWeighted;
  if (g.id_width() == IdWidth::k64) flags |= kFlagWideIds;
  if (g.symmetric()) flags |= kFlagSymmetric;

  ByteWriter w;
  w.reserve(28 + 8 * g.offsets().size() + (id_width + 4) * g.num_edges());
  w.raw("HYTG");
  w.u32(kCsrFormatVersion);
  w.u32(flags);
  w.u64(g.num_vertices());
  w.u64(g.num_edges());
  for (EdgeIndex o : g.offsets()) w.u64(o);
  for (VertexId u : g.neighbors()) id_width == 4 ? w.u32(static_cast<std::uint32_t>(u)) : w.u64(u);
  if (g.weighted()) {
    for (Weight x : g.weights()) w.u32(x);
  }
  return w.take();
}

CsrGraph decode_binary_csr(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  if (r.raw(4) != "HYTG") throw FormatError("bad magic, not a binary CSR file");
  const std::uint32_t version = r.u32();
  if (version != kCsrFormatVersion)
    throw FormatError("unsupported format version " + std::to_string(version));
  const std::uint32_t flags = r.u32();
  if (flags & ~(kFlagWeighted | kFlagWideIds | kFlagSymmetric))
    throw FormatError("unknown flag bits");
  const std::uint64_t n = r.u64();
  const std::uint64_t m = r.u64();
  if (n == ~0ULL) throw FormatError("vertex count out of range");
  const int id_width = (flags & kFlagWideIds) ? 8 : 4;
  const bool weighted = flags & kFlagWeighted;
  // Size check before allocating anything.
  const unsigned __int128 expected = static_cast<unsigned __int128>(n + 1) * 8 +
                                     static_cast<unsigned __int128>(m) * (id_width + (weighted ? 4 : 0));
  if (expected > r.remaining()) throw FormatError("truncated file");
  if (expected < r.remaining()) throw FormatError("trailing bytes after CSR payload");

  std::vector<EdgeIndex> offsets(n + 1);
  for (auto& o : offsets) o = r.u64();
  std::vector<VertexId> neighbors(m);
  for (auto& u : neighbors) u = r.uint(id_width);
  std::optional<std::vector<Weight>> weights;
  if (weighted) {
    weights.emplace(m);
    for (auto& x : *weights) x = r.u32();
  }
  return CsrGraph(std::move(offsets), std::move(neighbors), std::move(weights),
                  id_width == 8 ? IdWidth::k64 : IdWidth::k32, flags & kFlagSymmetric);
}

void write_binary_csr(const CsrGraph& g, const std::filesystem::path& path) {
  write_file(path, encode_binary_csr(g));
}

CsrGraph read_binary_csr(const std::filesystem::path& path) {
  return decode_binary_csr(read_file(path));
}

bool is_binary_csr(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  char magic[4] = {};
  in.read(magic, 4);
  return in.gcount() == 4 && std::string_view(magic, 4) == "HYTG";
}

void write_u64_array(std::span<const std::uint64_t> values, const std::filesystem::path& path) {
  ByteWriter w;
  w.reserve(8 * (values.size() + 1));
  w.u64(values.size());
  for (auto v : values) w.u64(v);
  write_file(path, w.take());
}

std::vector<std::uint64_t> read_u64_array(const std::filesystem::path& path) {
  auto bytes = read_file(path);
  ByteReader r(bytes);
  const std::uint64_t count = r.u64();
  if (count > r.remaining() / 8 || r.remaining() != count * 8) throw FormatError("array length does not match file size");
  std::vector<std::uint64_t> out(count);
  for (auto& v : out) v = r.u64();
  return out;
}

void write_f64_array(std::span<const double> values, const std::filesystem::path& path) {
  ByteWriter w;
  w.reserve(8 * (values.size() + 1));
  w.u64(values.size());
  for (double v : values) w.u64(std::bit_cast<std::uint64_t>(v));
  write_file(path, w.take());
}

}  // namespace hxsim
