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

#ifndef SIDEFUZZ_RNG_H_
#define SIDEFUZZ_RNG_H_

#include <cstdint>
#include <random>

namespace sidefuzz {

// Seeded generator with a portable bounded draw. std::mt19937_64's output
// sequence is fixed by the standard; the distributions are not, so they are
// avoided here to keep campaigns bit-reproducible across toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform in [0, n). n must be > 0.
  uint64_t Below(uint64_t n) {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(engine_()) * n) >> 64);
  }

  bool Coin() { return engine_() >> 63; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sidefuzz

#endif  // SIDEFUZZ_RNG_H_
