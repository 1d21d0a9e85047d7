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

#include "sidefuzz/campaign.h"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "sidefuzz/benchmarks.h"
#include "sidefuzz/mutation.h"
#include "sidefuzz/rng.h"

namespace sidefuzz {
namespace fs = std::filesystem;

namespace {

constexpr size_t kMaxSavedHarnessErrors = 64;

class CampaignClock {
 public:
  explicit CampaignClock(uint64_t virtual_rate)
      : virtual_rate_(virtual_rate), start_(std::chrono::steady_clock::now()) {}

  double Now(uint64_t executions) const {
    if (virtual_rate_ > 0) {
      return static_cast<double>(executions) /
             static_cast<double>(virtual_rate_);
    }
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  uint64_t virtual_rate_;
  std::chrono::steady_clock::time_point start_;
};

class Campaign {
 public:
  Campaign(const CampaignConfig& config, DriverSpec spec)
      : config_(config),
        spec_(std::move(spec)),
        runner_(spec_),
        rng_(config.rng_seed),
        clock_(config.virtual_rate) {
    report_.driver_name = spec_.name;
    report_.dimension = spec_.dimension;
    report_.report_epsilon = config.report_epsilon;
  }

  CampaignReport Run(const std::vector<std::pair<std::string, Bytes>>& seeds);

 private:
  // Returns true once the timeout is reached.
  bool Evaluate(const Bytes& input, std::optional<size_t> parent,
                bool force_enqueue);
  void EmitRowsUpTo(double now);
  void WriteRow(const StatsRow& row);
  void RecordHarnessError(const Bytes& input, const DiffResult& r);
  void WriteOutputs();

  const CampaignConfig& config_;
  DriverSpec spec_;
  DriverRunner runner_;
  Rng rng_;
  CampaignClock clock_;
  CorpusQueue queue_;
  GlobalCoverage global_;
  HighScore high_;
  CampaignReport report_;
  std::set<Bytes> harness_seen_;
  uint64_t executions_ = 0;
  uint64_t next_row_second_ = 1;
  bool intake_ = true;
  std::ofstream stats_out_;
};

void Campaign::EmitRowsUpTo(double now) {
  while (next_row_second_ <= config_.timeout_seconds &&
         static_cast<double>(next_row_second_) <= now) {
    const StatsRow row{next_row_second_, executions_, high_.value,
                       global_.count(), queue_.size()};
    report_.stats.push_back(row);
    WriteRow(row);
    ++next_row_second_;
  }
}

void Campaign::WriteRow(const StatsRow& row) {
  stats_out_ << row.seconds << ',' << row.executions << ',' << row.max_delta
             << ',' << row.coverage_count << ',' << row.queue_size << '\n';
  stats_out_.flush();
}

void Campaign::RecordHarnessError(const Bytes& input, const DiffResult& r) {
  if (!harness_seen_.insert(input).second) return;
  if (report_.harness_errors.size() >= kMaxSavedHarnessErrors) return;
  const fs::path dir = config_.out_dir / "harness_errors";
  fs::create_directories(dir);
  char name[32];
  std::snprintf(name, sizeof(name), "id:%06zu", report_.harness_errors.size());
  WriteFile(dir / name, input);
  report_.harness_errors.push_back({input, r.error});
}

bool Campaign::Evaluate(const Bytes& input, std::optional<size_t> parent,
                        bool force_enqueue) {
  ++executions_;
  const DiffResult r = runner_.Run(input);
  const double now = clock_.Now(executions_);
  if (r.executed()) {
    if (r.outcome == Outcome::kHarnessError) RecordHarnessError(input, r);
    const size_t before = queue_.size();
    const uint64_t prev_value = high_.value;
    const bool prev_has_witness = high_.has_witness;
    Consider({input, r, spec_.dimension, now, parent}, runner_.coverage(0),
             runner_.coverage(1), global_, high_, queue_);
    if (force_enqueue && queue_.size() == before) {
      QueueEntry e;
      e.bytes = input;
      e.best_delta = r.delta_for(spec_.dimension);
      e.discovered_at = now;
      queue_.Add(std::move(e));
    }
    if (queue_.size() > before) {
      Persist(config_.out_dir / "queue", queue_.at(queue_.size() - 1));
    }
    if (high_.value != prev_value || high_.has_witness != prev_has_witness) {
      report_.witness_cost1 = r.cost1;
      report_.witness_cost2 = r.cost2;
    }
    if (high_.value > 0 && !report_.first_positive_at) {
      report_.first_positive_at = high_.achieved_at;
    }
  }
  if (!intake_) EmitRowsUpTo(now);
  return now >= static_cast<double>(config_.timeout_seconds);
}

CampaignReport Campaign::Run(
    const std::vector<std::pair<std::string, Bytes>>& seeds) {
  fs::create_directories(config_.out_dir / "queue");
  stats_out_.open(config_.out_dir / "stats.csv", std::ios::trunc);
  if (!stats_out_) {
    throw ConfigError("cannot write stats.csv in " + config_.out_dir.string());
  }
  stats_out_ << kStatsHeader << '\n';

  bool done = false;
  for (const auto& [name, bytes] : seeds) {
    Bytes seed = bytes;
    if (seed.size() > config_.max_input_len) seed.resize(config_.max_input_len);
    if (seed.empty()) continue;
    done = Evaluate(seed, std::nullopt, /*force_enqueue=*/true);
    if (done) break;
  }
  if (queue_.empty()) {
    throw ConfigError("no usable seed: every seed was empty or rejected");
  }
  intake_ = false;
  const StatsRow row0{0, executions_, high_.value, global_.count(),
                      queue_.size()};
  report_.stats.push_back(row0);
  WriteRow(row0);
  EmitRowsUpTo(clock_.Now(executions_));

  Bytes mutant;
  while (!done) {
    QueueEntry& entry = queue_.Next();
    const size_t id = entry.id;
    const Bytes base = entry.bytes;

    if (!entry.deterministic_done && !config_.skip_deterministic) {
      DeterministicStage stage(base);
      while (!done && stage.Next(mutant)) done = Evaluate(mutant, id, false);
      queue_.at(id).deterministic_done = true;
    }
    for (size_t i = 0; i < config_.havoc_iterations && !done; ++i) {
      done = Evaluate(Havoc(base, config_.max_input_len, rng_), id, false);
    }
    if (queue_.size() >= 2) {
      for (size_t i = 0; i < config_.splice_rounds && !done; ++i) {
        size_t other = rng_.Below(queue_.size() - 1);
        if (other >= id) ++other;
        auto spliced =
            Splice(base, queue_.at(other).bytes, config_.max_input_len, rng_);
        if (!spliced) continue;
        done =
            Evaluate(Havoc(*spliced, config_.max_input_len, rng_), id, false);
      }
    }
  }

  report_.high_score = high_;
  report_.executions = executions_;
  report_.coverage_count = global_.count();
  report_.queue_size = queue_.size();
  report_.verdict = ClassifyVerdict(high_.value, config_.report_epsilon);
  WriteOutputs();
  return report_;
}

void Campaign::WriteOutputs() {
  stats_out_.close();
  WriteFile(config_.out_dir / "witness.bin", high_.witness_bytes);
  {
    std::ofstream w(config_.out_dir / "witness.txt", std::ios::trunc);
    w << RenderWitness(high_.witness, high_.value, spec_.dimension);
  }
  std::ofstream rep(config_.out_dir / "report.txt", std::ios::trunc);
  rep << RenderReport(report_);
}

}  // namespace

std::string_view VerdictName(LeakVerdict v) {
  switch (v) {
    case LeakVerdict::kNoDifferenceFound:
      return "no-difference-found";
    case LeakVerdict::kBelowEpsilon:
      return "below-epsilon";
    case LeakVerdict::kLeakIndicated:
      return "leak-indicated";
  }
  return "?";
}

LeakVerdict ClassifyVerdict(uint64_t max_delta,
                            std::optional<uint64_t> epsilon) {
  if (max_delta == 0) return LeakVerdict::kNoDifferenceFound;
  if (epsilon && max_delta < *epsilon) return LeakVerdict::kBelowEpsilon;
  return LeakVerdict::kLeakIndicated;
}

DriverSpec ResolveDriver(std::string_view name,
                         std::optional<CostDimension> dimension,
                         std::optional<size_t> segment_cap,
                         std::optional<Charset> charset) {
  DriverSpec spec = bench::MakeDriver(name);
  if (dimension) spec.dimension = *dimension;
  if (segment_cap) {
    if (*segment_cap == 0) throw ConfigError("segment cap must be >= 1");
    spec.constraints.segment_cap = *segment_cap;
  }
  if (charset) spec.constraints.charset = *charset;
  return spec;
}

CampaignReport RunCampaign(const CampaignConfig& config) {
  if (config.timeout_seconds < 1) {
    throw ConfigError("timeout must be at least 1 second");
  }
  if (config.max_input_len < 1) {
    throw ConfigError("max input length must be at least 1");
  }
  if (config.out_dir.empty()) throw ConfigError("output directory required");
  DriverSpec spec = ResolveDriver(config.driver_name, config.dimension,
                                  config.segment_cap, config.charset);
  const auto seeds = LoadSeeds(config.seed_dir);
  Campaign campaign(config, std::move(spec));
  return campaign.Run(seeds);
}

DiffResult Replay(const DriverSpec& spec, const fs::path& input_file) {
  const Bytes input = ReadFile(input_file);
  return RunDriver(spec, input);
}

std::string RenderWitness(const Segments& w, uint64_t delta,
                          CostDimension dim) {
  std::ostringstream out;
  out << "pub=" << HexList(w.pub) << '\n'
      << "sec_1=" << HexList(w.sec1) << '\n'
      << "sec_2=" << HexList(w.sec2) << '\n'
      << "delta=" << delta << " (" << DimensionName(dim) << ")\n";
  return out.str();
}

std::string RenderResult(const DriverSpec& spec, const DiffResult& r) {
  std::ostringstream out;
  out << "driver=" << spec.name << '\n'
      << "outcome=" << OutcomeName(r.outcome) << '\n';
  if (r.outcome == Outcome::kParseReject) return out.str();
  out << RenderWitness(r.decoded, r.delta_for(spec.dimension), spec.dimension)
      << "cost_1=ops:" << r.cost1.ops << ",mem:" << r.cost1.peak_mem
      << ",response:" << r.cost1.response_bytes << '\n'
      << "cost_2=ops:" << r.cost2.ops << ",mem:" << r.cost2.peak_mem
      << ",response:" << r.cost2.response_bytes << '\n';
  if (!r.error.empty()) out << "error=" << r.error << '\n';
  return out.str();
}

std::string RenderReport(const CampaignReport& r) {
  std::ostringstream out;
  out << "driver: " << r.driver_name << '\n'
      << "dimension: " << DimensionName(r.dimension) << '\n'
      << "executions: " << r.executions << '\n'
      << "max_delta: " << r.high_score.value << '\n';
  if (r.first_positive_at) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", *r.first_positive_at);
    out << "time_to_first_positive_delta_s: " << buf << '\n';
  } else {
    out << "time_to_first_positive_delta_s: -\n";
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", r.high_score.achieved_at);
  out << "max_delta_reached_at_s: " << buf << '\n'
      << "coverage_count: " << r.coverage_count << '\n'
      << "queue_size: " << r.queue_size << '\n'
      << "harness_errors: " << r.harness_errors.size() << '\n';
  for (const auto& h : r.harness_errors) {
    out << "  " << HexString(h.bytes) << ": " << h.message << '\n';
  }
  if (r.report_epsilon) out << "epsilon: " << *r.report_epsilon << '\n';
  out << "verdict: " << VerdictName(r.verdict) << '\n'
      << "witness:\n"
      << RenderWitness(r.high_score.witness, r.high_score.value, r.dimension)
      << "note: a campaign that finds no difference does not prove the "
         "absence of side channels.\n";
  return out.str();
}

}  // namespace sidefuzz
