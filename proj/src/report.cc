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

#include "sidefuzz/report.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sidefuzz {
namespace fs = std::filesystem;

namespace {

uint64_t ParseField(const std::string& field, const fs::path& file,
                    size_t line_no) {
  try {
    size_t pos = 0;
    const unsigned long long v = std::stoull(field, &pos);
    if (pos == field.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("malformed stats row at " + file.string() + ":" +
                    std::to_string(line_no));
}

std::string Fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

MeanAndError Aggregate(const std::vector<double>& values) {
  MeanAndError r;
  if (values.empty()) return r;
  double sum = 0;
  for (double v : values) sum += v;
  r.mean = sum / values.size();
  if (values.size() < 2) return r;
  double ss = 0;
  for (double v : values) ss += (v - r.mean) * (v - r.mean);
  const double sd = std::sqrt(ss / (values.size() - 1));
  r.std_error = sd / std::sqrt(static_cast<double>(values.size()));
  return r;
}

std::vector<StatsRow> ReadStats(const fs::path& stats_csv) {
  std::ifstream in(stats_csv);
  if (!in) throw ConfigError("missing stats file: " + stats_csv.string());
  std::string line;
  if (!std::getline(in, line) || line != kStatsHeader) {
    throw ConfigError("unexpected stats header in " + stats_csv.string());
  }
  std::vector<StatsRow> rows;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (fields.size() != 5) {
      throw ConfigError("malformed stats row at " + stats_csv.string() + ":" +
                        std::to_string(line_no));
    }
    StatsRow r;
    r.seconds = ParseField(fields[0], stats_csv, line_no);
    r.executions = ParseField(fields[1], stats_csv, line_no);
    r.max_delta = ParseField(fields[2], stats_csv, line_no);
    r.coverage_count = ParseField(fields[3], stats_csv, line_no);
    r.queue_size = ParseField(fields[4], stats_csv, line_no);
    rows.push_back(r);
  }
  return rows;
}

RunSummary SummarizeRun(const fs::path& out_dir) {
  RunSummary s;
  s.dir = out_dir;
  for (const StatsRow& r : ReadStats(out_dir / "stats.csv")) {
    s.final_max_delta = std::max(s.final_max_delta, r.max_delta);
    if (r.max_delta > 0 && !s.first_positive_seconds) {
      s.first_positive_seconds = r.seconds;
    }
  }
  return s;
}

CampaignSummary Summarize(const std::vector<fs::path>& dirs) {
  if (dirs.empty()) throw ConfigError("no campaign directories given");
  CampaignSummary s;
  std::vector<double> deltas;
  std::vector<double> times;
  for (const auto& d : dirs) {
    RunSummary run = SummarizeRun(d);
    deltas.push_back(static_cast<double>(run.final_max_delta));
    s.max_delta = std::max(s.max_delta, run.final_max_delta);
    if (run.first_positive_seconds) {
      times.push_back(static_cast<double>(*run.first_positive_seconds));
    }
    s.runs.push_back(std::move(run));
  }
  s.delta = Aggregate(deltas);
  s.runs_with_positive = times.size();
  if (!times.empty()) s.time_to_positive = Aggregate(times);
  return s;
}

std::string RenderSummary(const CampaignSummary& s) {
  std::ostringstream out;
  out << "runs,avg_delta,std_error,max_delta,time_to_positive,"
         "time_std_error,runs_with_positive\n";
  out << s.runs.size() << ',' << Fixed(s.delta.mean) << ','
      << Fixed(s.delta.std_error) << ',' << s.max_delta << ',';
  if (s.time_to_positive) {
    out << Fixed(s.time_to_positive->mean) << ','
        << Fixed(s.time_to_positive->std_error);
  } else {
    out << "-,-";
  }
  out << ',' << s.runs_with_positive << '\n';
  return out.str();
}

}  // namespace sidefuzz
