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

#include "hxsim/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "hxsim/report.hpp"

namespace hxsim {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

ConfigMap parse_config(std::istream& in) {
  ConfigMap map;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, "expected key = value");
    std::string key = trim(std::string_view(body).substr(0, eq));
    std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty() || value.empty()) throw ParseError(lineno, "expected key = value");
    map[std::move(key)] = std::move(value);
  }
  return map;
}

ConfigMap load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  return parse_config(in);
}

double config_double(const std::string& key, const std::string& value) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw ConfigError("'" + key + "' expects a number, got '" + value + "'");
  return v;
}

std::uint64_t config_u64(const std::string& key, const std::string& value) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw ConfigError("'" + key + "' expects a non-negative integer, got '" + value + "'");
  return v;
}

void apply_cost_config(ConfigMap& map, CostModelConfig& cfg) {
  auto u32 = [&](const char* key, std::uint32_t& field) {
    if (auto it = map.find(key); it != map.end()) {
      const auto v = config_u64(key, it->second);
      if (v > 0xffffffffULL) throw ConfigError(std::string(key) + " is too large");
      field = static_cast<std::uint32_t>(v);
      map.erase(it);
    }
  };
  auto f64 = [&](const char* key, double& field) {
    if (auto it = map.find(key); it != map.end()) {
      field = config_double(key, it->second);
      map.erase(it);
    }
  };
  u32("d1", cfg.d1);
  u32("d2", cfg.d2);
  u32("m", cfg.m);
  u32("mr", cfg.mr);
  f64("rtt", cfg.rtt);
  f64("gamma", cfg.gamma);
  f64("alpha", cfg.alpha);
  f64("beta", cfg.beta);
  u32("k", cfg.k);
  f64("compaction_throughput", cfg.compaction_throughput);
  f64("kernel_throughput", cfg.kernel_throughput);
}

void write_cost_config(std::ostream& out, const CostModelConfig& cfg) {
  out << "d1 = " << cfg.d1 << "\n"
      << "d2 = " << cfg.d2 << "\n"
      << "m = " << cfg.m << "\n"
      << "mr = " << cfg.mr << "\n"
      << "rtt = " << format_double(cfg.rtt) << "\n"
      << "gamma = " << format_double(cfg.gamma) << "\n"
      << "alpha = " << format_double(cfg.alpha) << "\n"
      << "beta = " << format_double(cfg.beta) << "\n"
      << "k = " << cfg.k << "\n"
      << "compaction_throughput = " << format_double(cfg.compaction_throughput) << "\n"
      << "kernel_throughput = " << format_double(cfg.kernel_throughput) << "\n";
}

}  // namespace hxsim
