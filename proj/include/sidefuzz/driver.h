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

// The differential driver: split one fuzz input into (pub, sec1, sec2), run
// the target on (pub, sec1) and (pub, sec2) with freshly cleared meters, and
// report the per-dimension cost difference.

#ifndef SIDEFUZZ_DRIVER_H_
#define SIDEFUZZ_DRIVER_H_

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "sidefuzz/bytes.h"
#include "sidefuzz/coverage.h"
#include "sidefuzz/metering.h"

namespace sidefuzz {

// What a target sees of the harness: the meter and the edge recorder.
class ExecutionContext {
 public:
  ExecutionContext(Meter& meter, EdgeRecorder* edges)
      : meter_(meter), edges_(edges) {}

  Meter& meter() { return meter_; }
  void Tick(uint64_t n = 1) { meter_.Tick(n); }
  void Site(uint16_t id) {
    if (edges_) edges_->Visit(id);
  }

 private:
  Meter& meter_;
  EdgeRecorder* edges_;
};

// Target under test. Returns its functional output, serialized.
using TargetFn =
    std::function<Bytes(ByteView pub, ByteView sec, ExecutionContext& ctx)>;

// Named allowed-byte sets used to map arbitrary fuzz bytes into a domain.
enum class Charset { kAny, kBinary, kDigits, kHex, kAlnum, kPrintable };

std::string_view CharsetName(Charset c);
std::optional<Charset> ParseCharset(std::string_view name);
// Maps b to allowed[b % |allowed|]; identity for kAny.
uint8_t MapToCharset(uint8_t b, Charset c);

struct Constraints {
  size_t segment_cap = 16;
  Charset charset = Charset::kAny;
};

struct Segments {
  Bytes pub;
  Bytes sec1;
  Bytes sec2;

  friend bool operator==(const Segments&, const Segments&) = default;
};

using ParseFn =
    std::function<std::optional<Segments>(ByteView, const Constraints&)>;

// Reads at most 3 * segment_cap bytes, splits them into three equal thirds
// (remainder dropped) and maps every byte into the charset. nullopt when a
// segment would be empty.
std::optional<Segments> DefaultParse(ByteView input, const Constraints& c);

struct DriverSpec {
  std::string name;
  ParseFn parse = DefaultParse;
  TargetFn target;
  CostDimension dimension = CostDimension::kOps;
  Constraints constraints;
};

enum class Outcome {
  kOk,
  // Both runs completed and their functional outputs differ. Informational.
  kOutputMismatch,
  kParseReject,
  kHarnessError,
};

std::string_view OutcomeName(Outcome o);

struct DiffResult {
  Outcome outcome = Outcome::kParseReject;
  CostReading cost1;
  CostReading cost2;
  CostReading delta;  // per-dimension |cost1 - cost2|
  Segments decoded;
  std::string error;  // harness error message, if any

  bool executed() const {
    return outcome == Outcome::kOk || outcome == Outcome::kOutputMismatch ||
           outcome == Outcome::kHarnessError;
  }
  uint64_t delta_for(CostDimension dim) const { return Get(delta, dim); }
};

// Reusable driver state: one meter, one edge recorder, and the classified
// coverage of each of the two executions.
class DriverRunner {
 public:
  explicit DriverRunner(const DriverSpec& spec, bool record_coverage = true);

  DiffResult Run(ByteView input);

  // Coverage of execution 0 (sec1) or 1 (sec2) of the last Run().
  const CoverageMap& coverage(int which) const { return coverage_[which]; }

  const DriverSpec& spec() const { return spec_; }

 private:
  // Returns false if the target threw.
  bool Execute(ByteView pub, ByteView sec, Bytes& output, CostReading& cost,
               CoverageMap& cov, std::string& error);

  DriverSpec spec_;
  bool record_coverage_;
  Meter meter_;
  EdgeRecorder edges_;
  std::array<CoverageMap, 2> coverage_;
};

// One-shot convenience wrapper around DriverRunner.
DiffResult RunDriver(const DriverSpec& spec, ByteView input);

}  // namespace sidefuzz

#endif  // SIDEFUZZ_DRIVER_H_
