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

#ifndef SIDEFUZZ_BYTES_H_
#define SIDEFUZZ_BYTES_H_

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sidefuzz {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

// Raised for invalid campaign configuration (bad flags, empty seed dir,
// unreadable files). Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised from inside a target execution when the harness itself is misused
// (e.g. freeing more metered memory than is live) or the target aborts.
class HarnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "[d0, fc, 07]"
std::string HexList(ByteView bytes);
// "d0fc07"
std::string HexString(ByteView bytes);

inline Bytes Concat(ByteView a, ByteView b) {
  Bytes out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline bool Equal(ByteView a, ByteView b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

// Big-endian decode of up to the first eight bytes.
inline uint64_t DecodeBigEndian(ByteView bytes, size_t max_bytes = 8) {
  uint64_t v = 0;
  for (size_t i = 0; i < bytes.size() && i < max_bytes; ++i) {
    v = (v << 8) | bytes[i];
  }
  return v;
}

// Two's-complement int32 from up to four big-endian bytes. Shorter inputs
// are zero-extended and therefore never negative.
inline int32_t DecodeInt32(ByteView bytes) {
  return static_cast<int32_t>(static_cast<uint32_t>(DecodeBigEndian(bytes, 4)));
}

}  // namespace sidefuzz

#endif  // SIDEFUZZ_BYTES_H_
