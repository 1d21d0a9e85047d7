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

// Ground truth for the maximum cost difference on a restricted domain,
// computed through the same driver path the fuzzer uses.

#ifndef SIDEFUZZ_ORACLE_H_
#define SIDEFUZZ_ORACLE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sidefuzz/benchmarks.h"
#include "sidefuzz/driver.h"

namespace sidefuzz {

class DomainTooLargeError : public ConfigError {
 public:
  DomainTooLargeError(std::string msg, std::optional<uint64_t> cardinality)
      : ConfigError(std::move(msg)), cardinality_(cardinality) {}
  // nullopt when the cardinality overflows 64 bits.
  std::optional<uint64_t> cardinality() const { return cardinality_; }

 private:
  std::optional<uint64_t> cardinality_;
};

inline constexpr uint64_t kDefaultOracleBudget = uint64_t{1} << 24;

struct OracleResult {
  std::string driver;
  std::string method;  // "exhaustive" or "structured:<statistic>"
  size_t segment_len = 0;
  std::string alphabet;
  uint64_t max_delta = 0;
  CostDimension dimension = CostDimension::kOps;
  Segments witness;
  Bytes witness_bytes;  // pub ++ sec1 ++ sec2, replayable
  uint64_t evaluated = 0;
};

// "binary" -> {0, 1}; "byte" -> {0..255}.
std::optional<Bytes> AlphabetByName(std::string_view name);

// The spec used for oracle runs: segment cap pinned to `segment_len` and no
// charset mapping, so that pub ++ sec1 ++ sec2 decodes to exactly those
// segments.
DriverSpec OracleSpec(const DriverSpec& spec, size_t segment_len);

// Maximum delta over every (pub, sec1, sec2) in alphabet^segment_len.
// Throws DomainTooLargeError when |alphabet|^(3 * segment_len) > budget.
// threads == 0 picks the hardware concurrency.
OracleResult ExhaustiveMaxDelta(const DriverSpec& spec, size_t segment_len,
                                ByteView alphabet,
                                uint64_t budget = kDefaultOracleBudget,
                                unsigned threads = 0);

// Maximum delta over the statistic's range: every pair of representative
// secrets under each representative public value.
OracleResult StructuredMaxDelta(const DriverSpec& spec,
                                const bench::StructuredDomain& domain,
                                size_t segment_len, ByteView alphabet);

// Looks up the benchmark's declared statistic. Throws ConfigError if it
// has none.
OracleResult StructuredMaxDelta(const DriverSpec& spec, size_t segment_len,
                                ByteView alphabet);

std::string RenderOracleText(const OracleResult& r);
std::string RenderOracleJson(const OracleResult& r);

}  // namespace sidefuzz

#endif  // SIDEFUZZ_ORACLE_H_
