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

// End-to-end checks of the command line binary and its exit codes.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "sidefuzz/queue.h"

namespace sidefuzz {
namespace {
namespace fs = std::filesystem;

struct Result {
  int exit_code = -1;
  std::string output;
};

Result RunCli(const std::string& args) {
  const std::string cmd = std::string(SIDEFUZZ_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  Result r;
  if (!pipe) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.output.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path FreshDir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("sidefuzz_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

TEST(CliTest, ListDrivers) {
  const Result r = RunCli("list-drivers");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("pwcheck_unsafe"), std::string::npos);
  EXPECT_NE(r.output.find("crime_compress"), std::string::npos);
}

TEST(CliTest, OracleTextAndJson) {
  const Result r =
      RunCli("oracle --driver pwcheck_safe --len 2 --alphabet binary");
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("max_delta: 0"), std::string::npos);
  EXPECT_NE(r.output.find("{\"alphabet\":\"binary\""), std::string::npos);
}

TEST(CliTest, OracleDomainTooLargeIsConfigError) {
  const Result r =
      RunCli("oracle --driver pwcheck_unsafe --len 4 --alphabet byte");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.output.find("domain too large"), std::string::npos);
}

TEST(CliTest, FuzzReportAndReplay) {
  const fs::path seeds = FreshDir("seeds");
  WriteFile(seeds / "s", Bytes{'q', 'w', 'e', 'r', 't', 'y', 'u', 'i', 'o'});
  const fs::path out = FreshDir("out");
  const Result fuzz = RunCli("fuzz --driver pwcheck_unsafe --seeds " +
                             seeds.string() + " --out " + out.string() +
                             " --timeout 3 --rng-seed 4 --virtual-rate 1000");
  EXPECT_EQ(fuzz.exit_code, 0) << fuzz.output;
  EXPECT_NE(fuzz.output.find("verdict: leak-indicated"), std::string::npos)
      << fuzz.output;

  const Result replay = RunCli("replay --driver pwcheck_unsafe --input " +
                               (out / "witness.bin").string());
  EXPECT_EQ(replay.exit_code, 0);
  EXPECT_NE(replay.output.find("delta"), std::string::npos);

  const Result report = RunCli("report " + out.string() + " " + out.string());
  EXPECT_EQ(report.exit_code, 0);
  EXPECT_NE(report.output.find("avg_delta"), std::string::npos);
}

TEST(CliTest, ReplayParseRejectIsNonzero) {
  const fs::path dir = FreshDir("reject");
  WriteFile(dir / "two", Bytes{1, 2});
  const Result r = RunCli("replay --driver pwcheck_unsafe --input " +
                          (dir / "two").string());
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.output.find("parse_reject"), std::string::npos) << r.output;
}

TEST(CliTest, ConfigurationErrorsExitTwo) {
  EXPECT_EQ(
      RunCli("fuzz --driver nope --seeds /nonexistent --out /tmp/x").exit_code,
      2);
  EXPECT_EQ(RunCli("replay --driver pwcheck_unsafe --dimension speed "
                   "--input /dev/null")
                .exit_code,
            2);
  EXPECT_EQ(RunCli("report /nonexistent/sidefuzz").exit_code, 2);
  EXPECT_EQ(RunCli("no-such-subcommand").exit_code, 2);
  EXPECT_EQ(RunCli("oracle --driver crime_compress --len 2 --alphabet binary "
                   "--structured")
                .exit_code,
            2);
}

TEST(CliTest, HelpExitsZero) { EXPECT_EQ(RunCli("--help").exit_code, 0); }

}  // namespace
}  // namespace sidefuzz
