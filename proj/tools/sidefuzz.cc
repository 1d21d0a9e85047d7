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

// Command line entry point: fuzz, replay, oracle, list-drivers and report.
//
// Exit codes: 0 on normal completion (a leak verdict is a normal result),
// 1 when a replayed input is rejected by the parser, 2 on configuration
// errors, 3 on internal errors.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sidefuzz/benchmarks.h"
#include "sidefuzz/campaign.h"
#include "sidefuzz/oracle.h"
#include "sidefuzz/report.h"

namespace sidefuzz {
namespace {

constexpr int kExitRejected = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInternal = 3;

struct CommonFlags {
  std::string driver;
  std::string dimension;
  std::optional<size_t> segment_cap;
  std::string charset;
};

void AddCommonFlags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--driver", f.driver, "registered driver name")->required();
  cmd->add_option("--dimension", f.dimension,
                  "cost dimension: ops, mem or response");
  cmd->add_option("--segment-cap", f.segment_cap,
                  "maximum bytes per input segment");
  cmd->add_option("--charset", f.charset,
                  "segment charset: any, binary, digits, hex, alnum, "
                  "printable");
}

std::optional<CostDimension> DimensionFlag(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto d = ParseDimension(s);
  if (!d) throw ConfigError("unknown cost dimension: " + s);
  return d;
}

std::optional<Charset> CharsetFlag(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto c = ParseCharset(s);
  if (!c) throw ConfigError("unknown charset: " + s);
  return c;
}

DriverSpec ResolveFlags(const CommonFlags& f) {
  return ResolveDriver(f.driver, DimensionFlag(f.dimension), f.segment_cap,
                       CharsetFlag(f.charset));
}

int ListDrivers() {
  std::printf("%-24s %-10s %-9s %-4s %s\n", "name", "variant", "dimension",
              "cap", "charset");
  for (const bench::Benchmark& b : bench::Registry()) {
    std::printf("%-24s %-10s %-9s %-4zu %s\n", b.name.c_str(),
                b.variant.c_str(),
                std::string(DimensionName(b.dimension)).c_str(),
                b.constraints.segment_cap,
                std::string(CharsetName(b.constraints.charset)).c_str());
  }
  return 0;
}

int Run(int argc, char** argv) {
  CLI::App app{"differential side-channel fuzzer"};
  app.require_subcommand(1);

  CommonFlags fuzz_flags;
  CampaignConfig config;
  std::string seeds, out;
  std::optional<uint64_t> epsilon;
  auto* fuzz = app.add_subcommand("fuzz", "run a fuzzing campaign");
  AddCommonFlags(fuzz, fuzz_flags);
  fuzz->add_option("--seeds", seeds, "seed directory")->required();
  fuzz->add_option("--out", out, "output directory")->required();
  fuzz->add_option("--timeout", config.timeout_seconds, "campaign seconds")
      ->capture_default_str();
  fuzz->add_option("--max-len", config.max_input_len, "maximum input length")
      ->capture_default_str();
  fuzz->add_option("--rng-seed", config.rng_seed, "random seed")
      ->capture_default_str();
  fuzz->add_option("--epsilon", epsilon, "report epsilon");
  fuzz->add_option("--virtual-rate", config.virtual_rate,
                   "executions per virtual second; 0 uses the wall clock")
      ->capture_default_str();
  fuzz->add_option("--havoc-iterations", config.havoc_iterations,
                   "havoc mutants per queue visit")
      ->capture_default_str();

  CommonFlags replay_flags;
  std::string input;
  auto* replay = app.add_subcommand("replay", "run the driver on one input");
  AddCommonFlags(replay, replay_flags);
  replay->add_option("--input", input, "input file")->required();

  CommonFlags oracle_flags;
  size_t len = 0;
  std::string alphabet;
  bool structured = false;
  uint64_t budget = kDefaultOracleBudget;
  unsigned threads = 0;
  auto* oracle =
      app.add_subcommand("oracle", "compute the maximum delta on a domain");
  AddCommonFlags(oracle, oracle_flags);
  oracle->add_option("--len", len, "segment length")->required();
  oracle->add_option("--alphabet", alphabet, "binary or byte")->required();
  oracle->add_flag("--structured", structured,
                   "enumerate the declared cost statistic");
  oracle->add_option("--budget", budget, "maximum driver runs")
      ->capture_default_str();
  oracle->add_option("--threads", threads, "worker threads; 0 for all cores");

  app.add_subcommand("list-drivers", "list registered drivers");

  std::vector<std::string> report_dirs;
  auto* report =
      app.add_subcommand("report", "summarize repeated campaign outputs");
  report->add_option("dirs", report_dirs, "campaign output directories")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (fuzz->parsed()) {
    config.driver_name = fuzz_flags.driver;
    config.dimension = DimensionFlag(fuzz_flags.dimension);
    config.segment_cap = fuzz_flags.segment_cap;
    config.charset = CharsetFlag(fuzz_flags.charset);
    config.seed_dir = seeds;
    config.out_dir = out;
    config.report_epsilon = epsilon;
    const CampaignReport r = RunCampaign(config);
    std::cout << RenderReport(r);
    return 0;
  }
  if (replay->parsed()) {
    const DriverSpec spec = ResolveFlags(replay_flags);
    const DiffResult r = Replay(spec, input);
    std::cout << RenderResult(spec, r);
    return r.outcome == Outcome::kParseReject ? kExitRejected : 0;
  }
  if (oracle->parsed()) {
    const DriverSpec spec = ResolveFlags(oracle_flags);
    const auto alpha = AlphabetByName(alphabet);
    if (!alpha) throw ConfigError("unknown alphabet: " + alphabet);
    const OracleResult r =
        structured ? StructuredMaxDelta(spec, len, *alpha)
                   : ExhaustiveMaxDelta(spec, len, *alpha, budget, threads);
    std::cout << RenderOracleText(r) << RenderOracleJson(r) << '\n';
    return 0;
  }
  if (report->parsed()) {
    std::vector<std::filesystem::path> dirs(report_dirs.begin(),
                                            report_dirs.end());
    std::cout << RenderSummary(Summarize(dirs));
    return 0;
  }
  return ListDrivers();
}

}  // namespace
}  // namespace sidefuzz

int main(int argc, char** argv) {
  try {
    return sidefuzz::Run(argc, argv);
  } catch (const sidefuzz::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return sidefuzz::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return sidefuzz::kExitInternal;
  }
}
