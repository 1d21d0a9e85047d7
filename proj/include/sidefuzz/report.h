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

// Aggregation of several campaign output directories into one summary row.

#ifndef SIDEFUZZ_REPORT_H_
#define SIDEFUZZ_REPORT_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sidefuzz/campaign.h"

namespace sidefuzz {

struct MeanAndError {
  double mean = 0;
  double std_error = 0;  // sample standard deviation / sqrt(n); 0 for n == 1
};

MeanAndError Aggregate(const std::vector<double>& values);

struct RunSummary {
  std::filesystem::path dir;
  uint64_t final_max_delta = 0;
  std::optional<uint64_t> first_positive_seconds;
};

struct CampaignSummary {
  std::vector<RunSummary> runs;
  MeanAndError delta;
  uint64_t max_delta = 0;
  // Over the runs that found a positive delta; nullopt if none did.
  std::optional<MeanAndError> time_to_positive;
  size_t runs_with_positive = 0;
};

// Parses a stats.csv file. Throws ConfigError on a missing or malformed file.
std::vector<StatsRow> ReadStats(const std::filesystem::path& stats_csv);

RunSummary SummarizeRun(const std::filesystem::path& out_dir);

// Throws ConfigError if `dirs` is empty or any stats.csv is missing.
CampaignSummary Summarize(const std::vector<std::filesystem::path>& dirs);

std::string RenderSummary(const CampaignSummary& s);

}  // namespace sidefuzz

#endif  // SIDEFUZZ_REPORT_H_
