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

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "sidefuzz/report.h"
#include "sidefuzz/rng.h"

namespace sidefuzz {
namespace {
namespace fs = std::filesystem;

fs::path FreshDir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("sidefuzz_campaign_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path RandomSeedDir(const std::string& name, uint64_t seed, size_t len) {
  const fs::path dir = FreshDir(name + "_seeds");
  Rng rng(seed);
  Bytes b(len);
  for (auto& x : b) x = static_cast<uint8_t>(rng.Below(256));
  WriteFile(dir / "seed0", b);
  return dir;
}

CampaignConfig VirtualConfig(const std::string& driver, const fs::path& seeds,
                             const fs::path& out, uint64_t timeout) {
  CampaignConfig c;
  c.driver_name = driver;
  c.seed_dir = seeds;
  c.out_dir = out;
  c.timeout_seconds = timeout;
  c.virtual_rate = 2000;
  c.rng_seed = 11;
  return c;
}

TEST(VerdictTest, Classification) {
  EXPECT_EQ(ClassifyVerdict(0, std::nullopt), LeakVerdict::kNoDifferenceFound);
  EXPECT_EQ(ClassifyVerdict(47, std::nullopt), LeakVerdict::kLeakIndicated);
  EXPECT_EQ(ClassifyVerdict(1, 64), LeakVerdict::kBelowEpsilon);
  EXPECT_EQ(ClassifyVerdict(64, 64), LeakVerdict::kLeakIndicated);
  EXPECT_EQ(ClassifyVerdict(0, 64), LeakVerdict::kNoDifferenceFound);
}

TEST(CampaignTest, OneSecondWallClockLiveness) {
  const fs::path seeds = RandomSeedDir("live", 1, 48);
  const fs::path out = FreshDir("live_out");
  CampaignConfig c;
  c.driver_name = "sanity_unsafe";
  c.seed_dir = seeds;
  c.out_dir = out;
  c.timeout_seconds = 1;
  const CampaignReport r = RunCampaign(c);
  EXPECT_GE(r.executions, 2u);
  const auto rows = ReadStats(out / "stats.csv");
  EXPECT_GE(rows.size(), 1u);
  EXPECT_TRUE(fs::exists(out / "report.txt"));
  EXPECT_TRUE(fs::exists(out / "witness.bin"));
  EXPECT_NE(Slurp(out / "report.txt").find("does not prove"),
            std::string::npos);
}

TEST(CampaignTest, RandomSeedBaselineHasZeroDelta) {
  const fs::path seeds = RandomSeedDir("baseline", 5, 48);
  const Bytes seed = ReadFile(seeds / "seed0");
  ASSERT_EQ(RunDriver(ResolveDriver("pwcheck_unsafe"), seed).delta.ops, 0u);
  const fs::path out = FreshDir("baseline_out");
  const CampaignReport r =
      RunCampaign(VirtualConfig("pwcheck_unsafe", seeds, out, 1));
  ASSERT_FALSE(r.stats.empty());
  EXPECT_EQ(r.stats.front().seconds, 0u);
  EXPECT_EQ(r.stats.front().executions, 1u);
  EXPECT_EQ(r.stats.front().max_delta, 0u);
  EXPECT_EQ(r.stats.front().queue_size, 1u);
}

TEST(CampaignTest, StatsAreMonotoneAndOnePerSecond) {
  const fs::path seeds = RandomSeedDir("mono", 2, 48);
  const fs::path out = FreshDir("mono_out");
  const CampaignReport r =
      RunCampaign(VirtualConfig("pwcheck_unsafe", seeds, out, 10));
  const auto rows = ReadStats(out / "stats.csv");
  ASSERT_EQ(rows.size(), 11u);
  for (size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].seconds, i);
    EXPECT_EQ(rows[i], r.stats[i]);
    if (i > 0) {
      EXPECT_GE(rows[i].max_delta, rows[i - 1].max_delta);
      EXPECT_GE(rows[i].executions, rows[i - 1].executions);
    }
  }
  EXPECT_EQ(rows.back().max_delta, r.high_score.value);
}

TEST(CampaignTest, WitnessReplaysToReportedDelta) {
  const fs::path seeds = RandomSeedDir("replay", 3, 48);
  const fs::path out = FreshDir("replay_out");
  const CampaignReport r =
      RunCampaign(VirtualConfig("pwcheck_unsafe", seeds, out, 30));
  ASSERT_GT(r.high_score.value, 0u);
  const DriverSpec spec = ResolveDriver("pwcheck_unsafe");
  const DiffResult a = Replay(spec, out / "witness.bin");
  EXPECT_EQ(a.delta.ops, r.high_score.value);
  EXPECT_EQ(a.decoded, r.high_score.witness);
  EXPECT_EQ(a.cost1, r.witness_cost1);
  EXPECT_EQ(a.cost2, r.witness_cost2);
  const DiffResult b = Replay(spec, out / "witness.bin");
  EXPECT_EQ(a.cost1, b.cost1);
  EXPECT_EQ(a.cost2, b.cost2);
  EXPECT_EQ(a.outcome, b.outcome);
  EXPECT_EQ(Slurp(out / "witness.txt"),
            RenderWitness(r.high_score.witness, r.high_score.value,
                          CostDimension::kOps));
}

TEST(CampaignTest, IdenticalConfigsProduceIdenticalOutputs) {
  const fs::path seeds = RandomSeedDir("repro", 4, 48);
  const fs::path a = FreshDir("repro_a");
  const fs::path b = FreshDir("repro_b");
  RunCampaign(VirtualConfig("mod_pow_unsafe", seeds, a, 4));
  RunCampaign(VirtualConfig("mod_pow_unsafe", seeds, b, 4));
  for (const char* f : {"stats.csv", "witness.bin", "witness.txt"}) {
    EXPECT_EQ(Slurp(a / f), Slurp(b / f)) << f;
  }
  std::vector<std::string> qa, qb;
  for (const auto& e : fs::directory_iterator(a / "queue")) {
    qa.push_back(e.path().filename().string());
  }
  for (const auto& e : fs::directory_iterator(b / "queue")) {
    qb.push_back(e.path().filename().string());
  }
  std::sort(qa.begin(), qa.end());
  std::sort(qb.begin(), qb.end());
  EXPECT_EQ(qa, qb);
}

TEST(CampaignTest, SafePwcheckFindsNoDifference) {
  const fs::path seeds = RandomSeedDir("safe", 6, 48);
  const fs::path out = FreshDir("safe_out");
  const CampaignReport r =
      RunCampaign(VirtualConfig("pwcheck_safe", seeds, out, 10));
  EXPECT_EQ(r.high_score.value, 0u);
  EXPECT_EQ(r.verdict, LeakVerdict::kNoDifferenceFound);
}

TEST(CampaignTest, QueueFilesMatchQueueSize) {
  const fs::path seeds = RandomSeedDir("qfiles", 8, 48);
  const fs::path out = FreshDir("qfiles_out");
  const CampaignReport r =
      RunCampaign(VirtualConfig("pad_unsafe", seeds, out, 3));
  size_t files = 0;
  for (const auto& e : fs::directory_iterator(out / "queue")) {
    (void)e;
    ++files;
  }
  EXPECT_EQ(files, r.queue_size);
}

TEST(CampaignTest, ConfigurationErrors) {
  const fs::path seeds = RandomSeedDir("cfg", 9, 48);
  const fs::path out = FreshDir("cfg_out");
  CampaignConfig c = VirtualConfig("no_such_driver", seeds, out, 1);
  EXPECT_THROW(RunCampaign(c), ConfigError);
  c.driver_name = "pwcheck_unsafe";
  c.timeout_seconds = 0;
  EXPECT_THROW(RunCampaign(c), ConfigError);
  c.timeout_seconds = 1;
  c.seed_dir = "/nonexistent/sidefuzz";
  EXPECT_THROW(RunCampaign(c), ConfigError);
  c.seed_dir = seeds;
  c.max_input_len = 0;
  EXPECT_THROW(RunCampaign(c), ConfigError);
}

TEST(ReplayTest, TruncatedFileIsParseReject) {
  const fs::path dir = FreshDir("truncated");
  WriteFile(dir / "two", Bytes{1, 2});
  const DiffResult r = Replay(ResolveDriver("pwcheck_unsafe"), dir / "two");
  EXPECT_EQ(r.outcome, Outcome::kParseReject);
}

TEST(ReplayTest, CrossVersionReplayOfHandWitness) {
  const fs::path dir = FreshDir("cross");
  Bytes input(16, 0x41);
  Bytes sec1(16, 0x41);
  sec1[15] = 0;
  Bytes sec2(16, 0x42);
  input.insert(input.end(), sec1.begin(), sec1.end());
  input.insert(input.end(), sec2.begin(), sec2.end());
  WriteFile(dir / "w", input);
  EXPECT_EQ(Replay(ResolveDriver("pwcheck_unsafe"), dir / "w").delta.ops, 30u);
  EXPECT_EQ(Replay(ResolveDriver("pwcheck_safe"), dir / "w").delta.ops, 0u);
}

TEST(ResolveDriverTest, Overrides) {
  const DriverSpec s = ResolveDriver("pwcheck_unsafe", CostDimension::kPeakMem,
                                     4, Charset::kDigits);
  EXPECT_EQ(s.dimension, CostDimension::kPeakMem);
  EXPECT_EQ(s.constraints.segment_cap, 4u);
  EXPECT_EQ(s.constraints.charset, Charset::kDigits);
  EXPECT_THROW(ResolveDriver("pwcheck_unsafe", std::nullopt, 0), ConfigError);
}

}  // namespace
}  // namespace sidefuzz
