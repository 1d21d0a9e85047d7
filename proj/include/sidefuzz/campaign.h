// Copyright 2026 The sidefuzz Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Campaign orchestration: seed intake, mutation scheduling, evaluation
// through the differential driver, high-score tracking and stats output.

#ifndef SIDEFUZZ_CAMPAIGN_H_
#define SIDEFUZZ_CAMPAIGN_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sidefuzz/driver.h"
#include "sidefuzz/metering.h"
#include "sidefuzz/queue.h"

namespace sidefuzz {

struct CampaignConfig {
  std::string driver_name;
  // Defaults to the benchmark's recommended dimension.
  std::optional<CostDimension> dimension;
  uint64_t timeout_seconds = 60;
  size_t max_input_len = 48;
  uint64_t rng_seed = 0;
  std::filesystem::path seed_dir;
  std::filesystem::path out_dir;
  std::optional<uint64_t> report_epsilon;
  // Override the benchmark's recommended constraints.
  std::optional<size_t> segment_cap;
  std::optional<Charset> charset;
  // 0 selects the wall clock. Otherwise campaign time is virtual: one second
  // elapses per `virtual_rate` driver executions, which makes the stats and
  // every output file a pure function of the configuration.
  uint64_t virtual_rate = 0;
  size_t havoc_iterations = 256;
  size_t splice_rounds = 16;
  bool skip_deterministic = false;
};

struct StatsRow {
  uint64_t seconds = 0;
  uint64_t executions = 0;
  uint64_t max_delta = 0;
  size_t coverage_count = 0;
  size_t queue_size = 0;

  friend bool operator==(const StatsRow&, const StatsRow&) = default;
};

inline constexpr std::string_view kStatsHeader =
    "seconds,executions,max_delta,coverage_count,queue_size";

enum class LeakVerdict { kNoDifferenceFound, kBelowEpsilon, kLeakIndicated };

std::string_view VerdictName(LeakVerdict v);

// no-difference-found iff max_delta == 0; below-epsilon iff
// 0 < max_delta < epsilon (epsilon given); leak-indicated otherwise.
LeakVerdict ClassifyVerdict(uint64_t max_delta,
                            std::optional<uint64_t> epsilon);

struct HarnessFinding {
  Bytes bytes;
  std::string message;
};

struct CampaignReport {
  std::string driver_name;
  CostDimension dimension = CostDimension::kOps;
  HighScore high_score;
  CostReading witness_cost1;
  CostReading witness_cost2;
  std::optional<double> first_positive_at;
  uint64_t executions = 0;
  size_t coverage_count = 0;
  size_t queue_size = 0;
  std::vector<HarnessFinding> harness_errors;
  std::vector<StatsRow> stats;
  std::optional<uint64_t> report_epsilon;
  LeakVerdict verdict = LeakVerdict::kNoDifferenceFound;
};

// Builds the driver for `name` with optional overrides. Throws ConfigError
// for an unknown driver.
DriverSpec ResolveDriver(std::string_view name,
                         std::optional<CostDimension> dimension = std::nullopt,
                         std::optional<size_t> segment_cap = std::nullopt,
                         std::optional<Charset> charset = std::nullopt);

// Runs a campaign and writes stats.csv, queue/, witness.bin, witness.txt and
// report.txt into config.out_dir. Throws ConfigError before the loop starts
// on a bad configuration.
CampaignReport RunCampaign(const CampaignConfig& config);

// One driver execution on the contents of `input_file`.
DiffResult Replay(const DriverSpec& spec,
                  const std::filesystem::path& input_file);

std::string RenderReport(const CampaignReport& report);
std::string RenderWitness(const Segments& witness, uint64_t delta,
                          CostDimension dim);
std::string RenderResult(const DriverSpec& spec, const DiffResult& r);

}  // namespace sidefuzz

#endif  // SIDEFUZZ_CAMPAIGN_H_
