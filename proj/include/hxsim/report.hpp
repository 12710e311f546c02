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

#ifndef HXSIM_REPORT_HPP
#define HXSIM_REPORT_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "hxsim/driver.hpp"

namespace hxsim {

/// Shortest round-trip decimal form.
std::string format_double(double v);

inline constexpr const char* kMetricsCsvHeader =
    "iteration,active_vertices,active_edges,filter_partitions,compaction_partitions,"
    "zerocopy_partitions,bytes_filter,bytes_compaction_payload,bytes_zerocopy_lines,"
    "tlps_total,cpu_compact_time,makespan";

void write_metrics_csv(std::ostream& out, std::span<const IterationMetrics> rows);
/// Reads the columns written by write_metrics_csv; throws ParseError.
std::vector<IterationMetrics> read_metrics_csv(std::istream& in);

nlohmann::json summary_to_json(const RunReport& report);
nlohmann::json plan_to_json(std::size_t iteration, const TransferPlan& plan);

/// Binary sidecar (u64 or f64 array) of the final per-vertex values.
void write_result_binary(const ResultArray& result, const std::filesystem::path& path);
/// "vertex value" lines; unreached integer values print as "inf".
void write_result_text(std::ostream& out, const ResultArray& result);

struct ComparedRun {
  std::string name;
  std::string engine = "?";
  std::size_t iterations = 0;
  std::uint64_t total_bytes = 0;
  std::optional<double> transfer_ratio;
  double makespan = 0;
  double filter_share = 0;  // share of active partitions per engine, all iterations
  double compaction_share = 0;
  double zerocopy_share = 0;
};

ComparedRun compare_entry(std::string name, std::span<const IterationMetrics> rows,
                          const std::optional<nlohmann::json>& summary);
std::string format_comparison(std::span<const ComparedRun> runs);

}  // namespace hxsim

#endif  // HXSIM_REPORT_HPP
