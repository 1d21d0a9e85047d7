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

// Metered analysis targets with known side channels and their repairs.
//
// Every target charges one tick at each loop-guard evaluation, each
// comparison, each early return and each straight-line statement that the
// cost model names; the exact tick points are documented next to each
// function. Magnitudes are not meant to match JVM bytecode counts.

#ifndef SIDEFUZZ_BENCHMARKS_H_
#define SIDEFUZZ_BENCHMARKS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sidefuzz/bytes.h"
#include "sidefuzz/driver.h"

namespace sidefuzz::bench {

// --- Password comparison --------------------------------------------------

// Early-exit comparison.
//   1 tick length check, +1 on the length-mismatch return;
//   per loop iteration 2 ticks (guard, compare); +1 on a mismatch return.
// ops = 1 + 2 * iterations + [early return].
bool PwcheckUnsafe(ByteView pub, ByteView sec, ExecutionContext& ctx);

// Full-length scan. 1 tick init, 4 ticks per iteration on every path
// (guard, bounds check, and two statements in whichever branch runs),
// 1 tick for the final branch-free length fold.
bool PwcheckSafe(ByteView pub, ByteView sec, ExecutionContext& ctx);

// --- String equality (web-server credential check) ------------------------

// Library String.equals: same cost shape as PwcheckUnsafe.
bool StringEqualsUnsafe(ByteView s1, ByteView s2, ExecutionContext& ctx);

// How the `result &= s1[i] == s2[i]` step is charged.
enum class AccumulateModel {
  // 3 ticks when the characters are equal, 2 when they differ.
  kLeaky,
  // 3 ticks regardless of outcome.
  kConstant,
};

// Accumulating comparison over min(l1, l2) characters.
//   4 ticks setup (result init, lengths, length compare, n = min),
//   +1 when the lengths differ; per iteration 1 guard tick plus the
//   accumulate charge above.
bool StringEqualsAccumulate(ByteView s1, ByteView s2, AccumulateModel model,
                            ExecutionContext& ctx);

// --- Padding ----------------------------------------------------------------

// Pads `src` with `pad_char` up to `total_length`.
//   Unsafe: 2 ticks (length, compare); returns early with +1 when
//   src >= total; otherwise 1 tick padLength, 2 ticks per pad iteration,
//   1 tick side branch, 1 tick concat. Allocates padLength for the builder
//   and total_length for the result.
Bytes PadUnsafe(ByteView src, uint8_t pad_char, bool right_pad,
                size_t total_length, ExecutionContext& ctx);
//   Safe: 3 ticks setup, 2 ticks per position over the full total_length,
//   2 ticks finish. Always allocates total_length twice.
Bytes PadSafe(ByteView src, uint8_t pad_char, bool right_pad,
              size_t total_length, ExecutionContext& ctx);

// --- Modular exponentiation
// ---------------------------------------------------

// Left-to-right square-and-multiply over exactly `exponent_bits` bits.
//   1 tick init, per bit 3 ticks (guard, square, bit test) plus 1 tick for
//   the multiply; 1 tick return. Unsafe multiplies only on set bits, safe
//   performs a discarded multiply on clear bits.
// Throws HarnessError when modulus < 2.
uint64_t ModPowUnsafe(uint64_t base, uint64_t exponent, int exponent_bits,
                      uint64_t modulus, ExecutionContext& ctx);
uint64_t ModPowSafe(uint64_t base, uint64_t exponent, int exponent_bits,
                    uint64_t modulus, ExecutionContext& ctx);

// --- Microbenchmarks
// ------------------------------------------------------------

// Array: index of the first `needle` in `haystack`, or haystack.size().
//   Unsafe: 2 ticks per probe (guard, compare), +1 on the found return,
//   +1 on the not-found return.
//   Safe: 3 ticks per probe (guard, compare, select) over the whole array,
//   1 tick return.
int64_t ArrayUnsafe(ByteView haystack, uint8_t needle, ExecutionContext& ctx);
int64_t ArraySafe(ByteView haystack, uint8_t needle, ExecutionContext& ctx);

// LoopAndbranch: a public loop bound `a` and a secret `taint`, in 32-bit
// wrapping arithmetic. loop(a) costs 2 ticks per iteration plus 1 for the
// final guard.
//   Unsafe: 1 tick sign branch; negative taint runs loop(a); otherwise
//   1 tick for `taint > a` and loop(a) only when it holds.
//   Safe: 1 tick sign branch, 2 ticks on either side, then loop(a) on both
//   sides - except that `taint + 10` wraps negative for taint close to
//   INT32_MAX, which skips the loop.
void LoopAndBranchUnsafe(int32_t a, int32_t taint, ExecutionContext& ctx);
void LoopAndBranchSafe(int32_t a, int32_t taint, ExecutionContext& ctx);

inline constexpr uint32_t kSanityBound = 1024;

// Sanity: does the secret equal the public value? Both operands are taken
// modulo kSanityBound.
//   Unsafe: counts up to taint (2 ticks per step, 1 final guard), 1 tick
//   compare.
//   Safe: counts over the whole bound (2 ticks per step, 1 final guard),
//   1 tick compare.
bool SanityUnsafe(uint32_t a, uint32_t taint, ExecutionContext& ctx);
bool SanitySafe(uint32_t a, uint32_t taint, ExecutionContext& ctx);

inline constexpr int kStraightlineStatements = 8;

// Straightline: 1 tick branch on secret > public; the taken side runs eight
// straight-line statements (8 ticks); 1 tick return. Safe runs eight
// dummy statements on the other side.
int64_t StraightlineUnsafe(uint8_t a, uint8_t secret, ExecutionContext& ctx);
int64_t StraightlineSafe(uint8_t a, uint8_t secret, ExecutionContext& ctx);

// --- Compression
// -----------------------------------------------------------------

// Compresses pub ++ sec; the compressed size is the response.
Bytes CrimeCompress(ByteView pub, ByteView sec, ExecutionContext& ctx);

// --- Salted credential check
// -----------------------------------------------------

// Stand-in digest: one byte per position derived from the password, salt
// and position. Costs 1 tick per produced byte irrespective of content.
Bytes ToyDigest(ByteView password, uint8_t salt, size_t length,
                ExecutionContext& ctx);

// `stored` is salt (1 byte) followed by the digest. The candidate
// salt ++ ToyDigest(password) is compared with `stored`:
//   unsafe with the String.equals cost shape (early exit),
//   safe with a constant-time scan (3 ticks per byte).
// 1 tick for the stored-size check, +1 on its early return.
bool SaltedLoginUnsafe(ByteView password, ByteView stored,
                       ExecutionContext& ctx);
bool SaltedLoginSafe(ByteView password, ByteView stored, ExecutionContext& ctx);

// --- Registry
// ---------------------------------------------------------------------

// One representative public value and a set of secrets covering every value
// of the statistic the target's cost depends on.
struct StructuredCase {
  Bytes pub;
  std::vector<Bytes> secrets;
};

struct StructuredDomain {
  std::string statistic;
  std::function<std::vector<StructuredCase>(size_t segment_len,
                                            ByteView alphabet)>
      cases;
};

struct Benchmark {
  std::string name;
  std::string family;
  std::string variant;  // "unsafe", "safe", "safe-leaky", ...
  std::string cost_model;
  CostDimension dimension = CostDimension::kOps;
  Constraints constraints;
  TargetFn target;
  std::optional<StructuredDomain> structured;
};

const std::vector<Benchmark>& Registry();
const Benchmark* Find(std::string_view name);

DriverSpec MakeDriver(const Benchmark& b);
// Throws ConfigError for an unknown name.
DriverSpec MakeDriver(std::string_view name);

}  // namespace sidefuzz::bench

#endif  // SIDEFUZZ_BENCHMARKS_H_
