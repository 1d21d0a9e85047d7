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

#ifndef SIDEFUZZ_MUTATION_H_
#define SIDEFUZZ_MUTATION_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "sidefuzz/bytes.h"
#include "sidefuzz/rng.h"

namespace sidefuzz {

inline constexpr int kArithMax = 35;
inline constexpr int kHavocMaxStack = 64;

inline constexpr std::array<int8_t, 9> kInteresting8 = {-128, -1, 0,   1,  16,
                                                        32,   64, 100, 127};
inline constexpr std::array<int16_t, 19> kInteresting16 = {
    -128, -1,  0,   1,   16,  32,   64,   100,  127,  -32768,
    -129, 128, 255, 256, 512, 1000, 1024, 4096, 32767};
inline constexpr std::array<int32_t, 27> kInteresting32 = {
    -128,   -1,    0,      1,     16,        32,        64,
    100,    127,   -32768, -129,  128,       255,       256,
    512,    1000,  1024,   4096,  32767,     INT32_MIN, -100663046,
    -32769, 32768, 65535,  65536, 100663045, INT32_MAX};

struct MutationBudget {
  size_t havoc_iterations = 256;
  size_t max_input_len = 48;
  uint64_t rng_seed = 0;
};

// AFL's deterministic sub-stages, in emission order.
enum class DetStage {
  kFlip1,
  kFlip2,
  kFlip4,
  kFlip8,
  kFlip16,
  kFlip32,
  kArith8,
  kArith16,
  kArith32,
  kInteresting8,
  kInteresting16,
  kInteresting32,
};
inline constexpr int kNumDetStages = 12;

// Lazily enumerates the deterministic mutants of one input. Candidates that
// leave the input unchanged (e.g. writing an interesting value that is
// already present) are skipped, so every emitted mutant differs from the
// input within one contiguous bit/byte window of at most four bytes.
class DeterministicStage {
 public:
  explicit DeterministicStage(Bytes input);

  // Writes the next mutant into `out`; false once exhausted.
  bool Next(Bytes& out);

  // Candidate count for `stage` at the current input length, including
  // candidates skipped as no-ops.
  size_t Candidates(DetStage stage) const;

  DetStage stage() const { return static_cast<DetStage>(stage_); }

 private:
  void Apply(DetStage stage, size_t index, Bytes& out) const;

  Bytes input_;
  int stage_ = 0;
  size_t index_ = 0;
};

// Stacks 1..64 random operations (bit flip, set byte, arithmetic,
// insert/delete/overwrite/duplicate block) onto `input`. The result has
// length in [1, max_input_len].
Bytes Havoc(ByteView input, size_t max_input_len, Rng& rng);

// prefix a[0, split_a) + suffix b[split_b, end), truncated to max_input_len.
Bytes SpliceAt(ByteView a, ByteView b, size_t split_a, size_t split_b,
               size_t max_input_len);

// Random split points with a non-empty prefix and suffix. Returns nullopt
// when a and b are byte-identical.
std::optional<Bytes> Splice(ByteView a, ByteView b, size_t max_input_len,
                            Rng& rng);

}  // namespace sidefuzz

#endif  // SIDEFUZZ_MUTATION_H_
