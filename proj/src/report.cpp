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

#include "hxsim/report.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace hxsim {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void write_metrics_csv(std::ostream& out, std::span<const IterationMetrics> rows) {
  out << kMetricsCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.iteration << ',' << r.active_vertices << ',' << r.active_edges << ','
        << r.filter_partitions << ',' << r.compaction_partitions << ',' << r.zerocopy_partitions << ','
        << r.bytes_filter << ',' << r.bytes_compaction_payload << ',' << r.bytes_zerocopy_lines << ','
        << r.tlps_total << ',' << format_double(r.cpu_compact_time) << ',' << format_double(r.makespan)
        << '\n';
  }
}

namespace {

template <typename T>
T parse_field(std::string_view s, std::size_t line) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(line, "bad metrics field '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::vector<IterationMetrics> read_metrics_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line) || line != kMetricsCsvHeader) throw ParseError(1, "unexpected metrics header");
  std::vector<IterationMetrics> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string_view> f;
    std::string_view rest(line);
    while (true) {
      auto comma = rest.find(',');
      f.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (f.size() != 12) throw ParseError(lineno, "expected 12 metrics columns");
    IterationMetrics r;
    r.iteration = parse_field<std::size_t>(f[0], lineno);
    r.active_vertices = parse_field<std::uint64_t>(f[1], lineno);
    r.active_edges = parse_field<std::uint64_t>(f[2], lineno);
    r.filter_partitions = parse_field<std::size_t>(f[3], lineno);
    r.compaction_partitions = parse_field<std::size_t>(f[4], lineno);
    r.zerocopy_partitions = parse_field<std::size_t>(f[5], lineno);
    r.bytes_filter = parse_field<std::uint64_t>(f[6], lineno);
    r.bytes_compaction_payload = parse_field<std::uint64_t>(f[7], lineno);
    r.bytes_zerocopy_lines = parse_field<std::uint64_t>(f[8], lineno);
    r.tlps_total = parse_field<std::uint64_t>(f[9], lineno);
    r.cpu_compact_time = parse_field<double>(f[10], lineno);
    r.makespan = parse_field<double>(f[11], lineno);
    rows.push_back(r);
  }
  return rows;
}

nlohmann::json summary_to_json(const RunReport& report) {
  const auto& o = report.options;
  const auto& s = report.summary;
  nlohmann::json mix = nlohmann::json::array();
  for (const auto& r : report.iterations) {
    const double total = static_cast<double>(r.filter_partitions + r.compaction_partitions + r.zerocopy_partitions);
    auto share = [&](std::size_t n) { return total == 0 ? 0.0 : static_cast<double>(n) / total; };
    mix.push_back({{"iteration", r.iteration},
                   {"filter", share(r.filter_partitions)},
                   {"compaction", share(r.compaction_partitions)},
                   {"zerocopy", share(r.zerocopy_partitions)}});
  }
  return {
      {"algorithm", to_string(o.algorithm)},
      {"engine", to_string(o.engine)},
      {"priority", to_string(o.policy.mode)},
      {"recompute", o.policy.recomputes()},
      {"streams", o.streams},
      {"d1", o.cost.d1},
      {"iterations", s.iterations},
      {"converged", s.converged},
      {"bytes_filter", s.bytes_filter},
      {"bytes_compaction_payload", s.bytes_compaction},
      {"bytes_zerocopy_lines", s.bytes_zerocopy},
      {"total_bytes", s.total_bytes},
      {"tlps_total", s.tlps},
      {"edge_volume_bytes", s.edge_volume_bytes},
      {"transfer_ratio", s.transfer_ratio},
      {"cpu_compact_time", s.cpu_compact_time},
      {"total_makespan", s.total_makespan},
      {"engine_mix", mix},
  };
}

namespace {

nlohmann::json unit_to_json(const TaskUnit& t) {
  return {{"engine", to_string(t.engine)},
          {"partitions", t.partitions},
          {"active_vertices", t.activity.active_vertices},
          {"active_edges", t.activity.active_edges},
          {"bytes", t.bytes},
          {"tlps", t.tlps},
          {"transfer_cost", t.transfer_cost},
          {"priority", t.priority}};
}

}  // namespace

nlohmann::json plan_to_json(std::size_t iteration, const TransferPlan& plan) {
  nlohmann::json units = nlohmann::json::array();
  for (const TaskUnit* t : plan.dispatch_order()) units.push_back(unit_to_json(*t));
  std::string choices;
  for (const auto& c : plan.choices) choices += !c ? '-' : *c == Engine::Filter ? 'F' : *c == Engine::Compaction ? 'C' : 'Z';
  return {{"iteration", iteration}, {"choices", choices}, {"selection_bytes", plan.selection_bytes}, {"units", units}};
}

void write_result_binary(const ResultArray& result, const std::filesystem::path& path) {
  std::visit(
      [&](const auto& values) {
        using T = typename std::decay_t<decltype(values)>::value_type;
        if constexpr (std::is_same_v<T, double>)
          write_f64_array(values, path);
        else
          write_u64_array(values, path);
      },
      result);
}

void write_result_text(std::ostream& out, const ResultArray& result) {
  std::visit(
      [&](const auto& values) {
        for (std::size_t v = 0; v < values.size(); ++v) {
          using T = typename std::decay_t<decltype(values)>::value_type;
          out << v << ' ';
          if constexpr (std::is_same_v<T, double>)
            out << format_double(values[v]);
          else if (values[v] == kUnreached)
            out << "inf";
          else
            out << values[v];
          out << '\n';
        }
      },
      result);
}

ComparedRun compare_entry(std::string name, std::span<const IterationMetrics> rows,
                          const std::optional<nlohmann::json>& summary) {
  ComparedRun c;
  c.name = std::move(name);
  c.iterations = rows.size();
  std::size_t f = 0, cp = 0, z = 0;
  for (const auto& r : rows) {
    c.total_bytes += r.bytes_filter + r.bytes_compaction_payload + r.bytes_zerocopy_lines;
    c.makespan += r.makespan;
    f += r.filter_partitions;
    cp += r.compaction_partitions;
    z += r.zerocopy_partitions;
  }
  if (const double all = static_cast<double>(f + cp + z); all > 0) {
    c.filter_share = static_cast<double>(f) / all;
    c.compaction_share = static_cast<double>(cp) / all;
    c.zerocopy_share = static_cast<double>(z) / all;
  }
  if (summary) {
    c.engine = summary->value("engine", std::string("?"));
    const std::uint64_t volume = summary->value("edge_volume_bytes", std::uint64_t{0});
    if (volume > 0) c.transfer_ratio = static_cast<double>(c.total_bytes) / static_cast<double>(volume);
  }
  return c;
}

std::string format_comparison(std::span<const ComparedRun> runs) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-28s %-10s %6s %16s %10s %14s %7s %7s %7s\n", "run", "engine", "iters",
                "bytes", "ratio", "makespan", "F", "C", "Z");
  out << line;
  for (const auto& r : runs) {
    const std::string ratio = r.transfer_ratio ? std::to_string(*r.transfer_ratio) : "n/a";
    std::snprintf(line, sizeof(line), "%-28s %-10s %6zu %16llu %10s %14.3f %7.3f %7.3f %7.3f\n", r.name.c_str(),
                  r.engine.c_str(), r.iterations, static_cast<unsigned long long>(r.total_bytes), ratio.c_str(),
                  r.makespan, r.filter_share, r.compaction_share, r.zerocopy_share);
    out << line;
  }
  return out.str();
}

}  // namespace hxsim
