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

#ifndef HXSIM_CONFIG_HPP
#define HXSIM_CONFIG_HPP

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>

#include "hxsim/cost_model.hpp"

namespace hxsim {

using ConfigMap = std::map<std::string, std::string>;

/// "key = value" lines; '#' starts a comment; blank lines are ignored.
/// Duplicate keys: the last one wins.
ConfigMap parse_config(std::istream& in);
ConfigMap load_config(const std::filesystem::path& path);

/// Moves every cost-model key (d1, d2, m, mr, rtt, gamma, alpha, beta, k,
/// compaction_throughput, kernel_throughput) out of `map` into `cfg`.
void apply_cost_config(ConfigMap& map, CostModelConfig& cfg);

double config_double(const std::string& key, const std::string& value);
std::uint64_t config_u64(const std::string& key, const std::string& value);

/// Writes every cost-model key with its current value.
void write_cost_config(std::ostream& out, const CostModelConfig& cfg);

}  // namespace hxsim

#endif  // HXSIM_CONFIG_HPP
