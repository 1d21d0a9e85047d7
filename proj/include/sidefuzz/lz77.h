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

// Small LZ77 codec.
//
// Stream layout:
//   u32 little-endian decoded length
//   tokens:
//     0x00..0x7F  literal run of (c + 1) bytes, which follow
//     0x80..0xFF  back-reference of length (c & 0x7F) + 4, followed by a
//                 u16 little-endian distance in [1, 65535]
//
// The compressor is greedy over a hash-chained 64 KiB window with a minimum
// match of four bytes. Matches may overlap their own output.

#ifndef SIDEFUZZ_LZ77_H_
#define SIDEFUZZ_LZ77_H_

#include <cstddef>
#include <optional>

#include "sidefuzz/bytes.h"

namespace sidefuzz {

class ExecutionContext;

namespace lz77 {

inline constexpr size_t kHeaderSize = 4;
inline constexpr size_t kMinMatch = 4;
inline constexpr size_t kMaxMatch = 0x7F + kMinMatch;
inline constexpr size_t kMaxLiteralRun = 0x80;
inline constexpr size_t kWindow = 0xFFFF;

Bytes Compress(ByteView data);

// Metered variant: one tick per emitted token and per match-candidate
// probe, working buffers recorded as allocations, and the compressed size
// declared as the response.
Bytes Compress(ByteView data, ExecutionContext& ctx);

// nullopt on a malformed stream.
std::optional<Bytes> Decompress(ByteView stream);

}  // namespace lz77
}  // namespace sidefuzz

#endif  // SIDEFUZZ_LZ77_H_
