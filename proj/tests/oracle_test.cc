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

#include "sidefuzz/oracle.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>

#include "sidefuzz/benchmarks.h"

namespace sidefuzz {
namespace {

const Bytes kBinary{0, 1};

// Independent brute force: nested loops over every pub/sec1/sec2 triple.
uint64_t BruteForceTwoByteBinary(const DriverSpec& spec) {
  const DriverSpec s = OracleSpec(spec, 2);
  uint64_t best = 0;
  for (int p = 0; p < 4; ++p) {
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        const Bytes in{
            static_cast<uint8_t>(p >> 1), static_cast<uint8_t>(p & 1),
            static_cast<uint8_t>(a >> 1), static_cast<uint8_t>(a & 1),
            static_cast<uint8_t>(b >> 1), static_cast<uint8_t>(b & 1)};
        const DiffResult r = RunDriver(s, in);
        if (r.outcome == Outcome::kOk ||
            r.outcome == Outcome::kOutputMismatch) {
          best = std::max(best, r.delta_for(s.dimension));
        }
      }
    }
  }
  return best;
}

TEST(ExhaustiveTest, AgreesWithBruteForceOnEveryBenchmark) {
  for (const auto& b : bench::Registry()) {
    const DriverSpec spec = bench::MakeDriver(b);
    const OracleResult r = ExhaustiveMaxDelta(spec, 2, kBinary);
    EXPECT_EQ(r.max_delta, BruteForceTwoByteBinary(spec)) << b.name;
    EXPECT_EQ(r.evaluated, 64u);
  }
}

TEST(ExhaustiveTest, WitnessReplaysToMaxDelta) {
  for (const auto& b : bench::Registry()) {
    const DriverSpec spec = bench::MakeDriver(b);
    const OracleResult r = ExhaustiveMaxDelta(spec, 2, kBinary);
    const DiffResult replay = RunDriver(OracleSpec(spec, 2), r.witness_bytes);
    EXPECT_EQ(replay.delta_for(spec.dimension), r.max_delta) << b.name;
    EXPECT_EQ(replay.decoded, r.witness) << b.name;
  }
}

TEST(ExhaustiveTest, SafePwcheckIsZero) {
  EXPECT_EQ(ExhaustiveMaxDelta(bench::MakeDriver("pwcheck_safe"), 2, kBinary)
                .max_delta,
            0u);
}

TEST(ExhaustiveTest, UnsafePwcheckTwoByteWitness) {
  const OracleResult r =
      ExhaustiveMaxDelta(bench::MakeDriver("pwcheck_unsafe"), 2, kBinary);
  // Under the documented model the extremes are a mismatch at byte 0
  // (4 ops) and a mismatch at byte 1 (6 ops).
  EXPECT_EQ(r.max_delta, 2u);
  const Bytes& pub = r.witness.pub;
  const bool first_mismatch_0 = r.witness.sec1[0] != pub[0];
  const Bytes& early = first_mismatch_0 ? r.witness.sec1 : r.witness.sec2;
  const Bytes& late = first_mismatch_0 ? r.witness.sec2 : r.witness.sec1;
  EXPECT_NE(early[0], pub[0]);
  EXPECT_EQ(late[0], pub[0]);
  EXPECT_NE(late[1], pub[1]);
}

TEST(ExhaustiveTest, SingletonAlphabetIsZero) {
  for (const auto& b : bench::Registry()) {
    EXPECT_EQ(
        ExhaustiveMaxDelta(bench::MakeDriver(b), 3, Bytes{0x41}).max_delta, 0u)
        << b.name;
  }
}

TEST(ExhaustiveTest, ThreadCountDoesNotChangeResult) {
  const DriverSpec spec = bench::MakeDriver("jetty_safe_leaky");
  const OracleResult one = ExhaustiveMaxDelta(spec, 4, kBinary, 1 << 24, 1);
  const OracleResult four = ExhaustiveMaxDelta(spec, 4, kBinary, 1 << 24, 4);
  EXPECT_EQ(one.max_delta, four.max_delta);
  EXPECT_EQ(one.witness_bytes, four.witness_bytes);
}

TEST(ExhaustiveTest, DomainTooLargeReportsCardinality) {
  try {
    ExhaustiveMaxDelta(bench::MakeDriver("pwcheck_unsafe"), 2,
                       *AlphabetByName("byte"));
    FAIL() << "expected DomainTooLargeError";
  } catch (const DomainTooLargeError& e) {
    EXPECT_EQ(e.cardinality(), uint64_t{1} << 48);  // 256^6
  }
  try {
    ExhaustiveMaxDelta(bench::MakeDriver("pwcheck_unsafe"), 3,
                       *AlphabetByName("byte"));
    FAIL() << "expected DomainTooLargeError";
  } catch (const DomainTooLargeError& e) {
    EXPECT_FALSE(e.cardinality().has_value());  // 256^9 overflows 64 bits
  }
  try {
    ExhaustiveMaxDelta(bench::MakeDriver("pwcheck_unsafe"), 2, kBinary, 63);
    FAIL() << "expected DomainTooLargeError";
  } catch (const DomainTooLargeError& e) {
    EXPECT_EQ(e.cardinality(), 64u);
  }
}

TEST(StructuredTest, AgreesWithExhaustiveOnTwoByteBinary) {
  for (const auto& b : bench::Registry()) {
    if (!b.structured) continue;
    const DriverSpec spec = bench::MakeDriver(b);
    EXPECT_EQ(StructuredMaxDelta(spec, 2, kBinary).max_delta,
              ExhaustiveMaxDelta(spec, 2, kBinary).max_delta)
        << b.name;
  }
}

TEST(StructuredTest, AgreesWithExhaustiveOnLargestExhaustibleDomains) {
  // 3 * len binary digits within 2^24 runs: len 8 for the 1-segment-length
  // statistics, checked on the targets whose cost depends on all bytes.
  for (const char* name : {"pwcheck_unsafe", "jetty_safe_leaky", "pad_unsafe",
                           "mod_pow_unsafe", "array_unsafe"}) {
    const DriverSpec spec = bench::MakeDriver(name);
    for (size_t len : {3, 4, 5}) {
      EXPECT_EQ(StructuredMaxDelta(spec, len, kBinary).max_delta,
                ExhaustiveMaxDelta(spec, len, kBinary).max_delta)
          << name << " len " << len;
    }
  }
}

TEST(StructuredTest, PwcheckSixteenBytes) {
  const OracleResult r = StructuredMaxDelta(bench::MakeDriver("pwcheck_unsafe"),
                                            16, *AlphabetByName("byte"));
  // ops = 1 + 2 * iterations + [mismatch return]: mismatch at the last byte
  // costs 34, at the first byte 4.
  EXPECT_EQ(r.max_delta, 30u);
  const DiffResult replay = RunDriver(
      OracleSpec(bench::MakeDriver("pwcheck_unsafe"), 16), r.witness_bytes);
  EXPECT_EQ(replay.delta.ops, 30u);
}

TEST(StructuredTest, ModPowEightBitIsPopcountEightVersusZero) {
  // One byte per segment is 8 exponent bits; per set bit one multiply tick.
  const OracleResult r = StructuredMaxDelta(bench::MakeDriver("mod_pow_unsafe"),
                                            1, *AlphabetByName("byte"));
  EXPECT_EQ(r.max_delta, 8u);
  const int pa = __builtin_popcount(r.witness.sec1[0]);
  const int pb = __builtin_popcount(r.witness.sec2[0]);
  EXPECT_EQ(std::abs(pa - pb), 8);
}

TEST(StructuredTest, JettyLeakyGrowsWithLength) {
  const DriverSpec leaky = bench::MakeDriver("jetty_safe_leaky");
  const DriverSpec ct = bench::MakeDriver("jetty_safe_ct");
  uint64_t prev = 0;
  for (size_t len : {2, 4, 8}) {
    const uint64_t d = StructuredMaxDelta(leaky, len, kBinary).max_delta;
    EXPECT_GT(d, prev) << len;
    EXPECT_EQ(d, len);  // one tick per matching position
    prev = d;
    EXPECT_EQ(StructuredMaxDelta(ct, len, kBinary).max_delta, 0u);
  }
}

TEST(StructuredTest, RefusesTargetWithoutStatistic) {
  EXPECT_THROW(
      StructuredMaxDelta(bench::MakeDriver("crime_compress"), 2, kBinary),
      ConfigError);
}

TEST(RenderTest, JsonLineHasFields) {
  const OracleResult r =
      ExhaustiveMaxDelta(bench::MakeDriver("pwcheck_unsafe"), 1, kBinary);
  const std::string j = RenderOracleJson(r);
  EXPECT_EQ(j.find('\n'), std::string::npos);
  EXPECT_NE(j.find("\"max_delta\":"), std::string::npos);
  EXPECT_NE(j.find("\"method\":\"exhaustive\""), std::string::npos);
  EXPECT_NE(RenderOracleText(r).find("max_delta: "), std::string::npos);
}

TEST(AlphabetTest, Names) {
  EXPECT_EQ(AlphabetByName("binary"), kBinary);
  EXPECT_EQ(AlphabetByName("byte")->size(), 256u);
  EXPECT_FALSE(AlphabetByName("ternary").has_value());
}

}  // namespace
}  // namespace sidefuzz
