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

#include "sidefuzz/mutation.h"

#include <algorithm>
#include <utility>

namespace sidefuzz {
namespace {

size_t Windows(size_t len, size_t width) {
  return len >= width ? len - width + 1 : 0;
}

uint32_t Load(const Bytes& b, size_t pos, size_t width, bool big_endian) {
  uint32_t v = 0;
  for (size_t i = 0; i < width; ++i) {
    const size_t at = big_endian ? pos + i : pos + width - 1 - i;
    v = (v << 8) | b[at];
  }
  return v;
}

void Store(Bytes& b, size_t pos, size_t width, bool big_endian, uint32_t v) {
  for (size_t i = 0; i < width; ++i) {
    const size_t at = big_endian ? pos + width - 1 - i : pos + i;
    b[at] = static_cast<uint8_t>(v & 0xFF);
    v >>= 8;
  }
}

void FlipBit(Bytes& b, size_t bit) {
  b[bit >> 3] ^= static_cast<uint8_t>(0x80u >> (bit & 7));
}

}  // namespace

DeterministicStage::DeterministicStage(Bytes input)
    : input_(std::move(input)) {}

size_t DeterministicStage::Candidates(DetStage stage) const {
  const size_t len = input_.size();
  const size_t arith = 2 * kArithMax;
  switch (stage) {
    case DetStage::kFlip1:
      return Windows(8 * len, 1);
    case DetStage::kFlip2:
      return Windows(8 * len, 2);
    case DetStage::kFlip4:
      return Windows(8 * len, 4);
    case DetStage::kFlip8:
      return Windows(len, 1);
    case DetStage::kFlip16:
      return Windows(len, 2);
    case DetStage::kFlip32:
      return Windows(len, 4);
    case DetStage::kArith8:
      return Windows(len, 1) * arith;
    case DetStage::kArith16:
      return Windows(len, 2) * arith * 2;
    case DetStage::kArith32:
      return Windows(len, 4) * arith * 2;
    case DetStage::kInteresting8:
      return Windows(len, 1) * kInteresting8.size();
    case DetStage::kInteresting16:
      return Windows(len, 2) * kInteresting16.size() * 2;
    case DetStage::kInteresting32:
      return Windows(len, 4) * kInteresting32.size() * 2;
  }
  return 0;
}

void DeterministicStage::Apply(DetStage stage, size_t index, Bytes& out) const {
  out = input_;
  switch (stage) {
    case DetStage::kFlip1:
      FlipBit(out, index);
      return;
    case DetStage::kFlip2:
      for (size_t k = 0; k < 2; ++k) FlipBit(out, index + k);
      return;
    case DetStage::kFlip4:
      for (size_t k = 0; k < 4; ++k) FlipBit(out, index + k);
      return;
    case DetStage::kFlip8:
      out[index] ^= 0xFF;
      return;
    case DetStage::kFlip16:
      for (size_t k = 0; k < 2; ++k) out[index + k] ^= 0xFF;
      return;
    case DetStage::kFlip32:
      for (size_t k = 0; k < 4; ++k) out[index + k] ^= 0xFF;
      return;
    default:
      break;
  }

  // Arithmetic: index = pos * variants + v. For 8-bit, v = 2*(j-1) + sign;
  // wider widths double that for endianness.
  auto arith = [&](size_t width, bool with_endian) {
    const size_t per_pos = 2 * kArithMax * (with_endian ? 2 : 1);
    const size_t pos = index / per_pos;
    size_t v = index % per_pos;
    const bool big_endian = with_endian && v >= 2 * kArithMax;
    v %= 2 * kArithMax;
    const uint32_t delta = static_cast<uint32_t>(v / 2 + 1);
    const bool subtract = v % 2 == 1;
    const uint32_t mask = width == 4 ? 0xFFFFFFFFu : (1u << (8 * width)) - 1;
    uint32_t cur = Load(out, pos, width, big_endian);
    cur = (subtract ? cur - delta : cur + delta) & mask;
    Store(out, pos, width, big_endian, cur);
  };
  auto interesting = [&](size_t width, size_t count, auto value_at) {
    const size_t per_pos = count * (width > 1 ? 2 : 1);
    const size_t pos = index / per_pos;
    const size_t v = index % per_pos;
    const bool big_endian = width > 1 && v >= count;
    Store(out, pos, width, big_endian,
          static_cast<uint32_t>(value_at(v % count)));
  };

  switch (stage) {
    case DetStage::kArith8:
      arith(1, false);
      return;
    case DetStage::kArith16:
      arith(2, true);
      return;
    case DetStage::kArith32:
      arith(4, true);
      return;
    case DetStage::kInteresting8:
      interesting(1, kInteresting8.size(), [](size_t i) {
        return static_cast<int32_t>(kInteresting8[i]);
      });
      return;
    case DetStage::kInteresting16:
      interesting(2, kInteresting16.size(), [](size_t i) {
        return static_cast<int32_t>(kInteresting16[i]);
      });
      return;
    case DetStage::kInteresting32:
      interesting(4, kInteresting32.size(),
                  [](size_t i) { return kInteresting32[i]; });
      return;
    default:
      return;
  }
}

bool DeterministicStage::Next(Bytes& out) {
  while (stage_ < kNumDetStages) {
    const auto stage = static_cast<DetStage>(stage_);
    if (index_ >= Candidates(stage)) {
      ++stage_;
      index_ = 0;
      continue;
    }
    Apply(stage, index_++, out);
    if (out != input_) return true;
  }
  return false;
}

namespace {

size_t BlockLen(size_t limit, Rng& rng) {
  // Bias toward short blocks, as AFL does.
  static constexpr size_t kCaps[] = {4, 16, 64};
  const size_t cap = std::min(limit, kCaps[rng.Below(3)]);
  return cap == 0 ? 0 : 1 + rng.Below(cap);
}

}  // namespace

Bytes Havoc(ByteView input, size_t max_input_len, Rng& rng) {
  Bytes out(input.begin(),
            input.begin() + std::min(input.size(), max_input_len));
  if (out.empty()) out.push_back(0);
  const size_t stack = size_t{1} << rng.Below(7);  // 1..64
  for (size_t s = 0; s < stack; ++s) {
    const size_t len = out.size();
    switch (rng.Below(13)) {
      case 0:
        FlipBit(out, rng.Below(len * 8));
        break;
      case 1:
        out[rng.Below(len)] = static_cast<uint8_t>(
            kInteresting8[rng.Below(kInteresting8.size())]);
        break;
      case 2:
        if (len >= 2) {
          Store(out, rng.Below(len - 1), 2, rng.Coin(),
                static_cast<uint16_t>(
                    kInteresting16[rng.Below(kInteresting16.size())]));
        }
        break;
      case 3:
        if (len >= 4) {
          Store(out, rng.Below(len - 3), 4, rng.Coin(),
                static_cast<uint32_t>(
                    kInteresting32[rng.Below(kInteresting32.size())]));
        }
        break;
      case 4:
        out[rng.Below(len)] -= static_cast<uint8_t>(1 + rng.Below(kArithMax));
        break;
      case 5:
        out[rng.Below(len)] += static_cast<uint8_t>(1 + rng.Below(kArithMax));
        break;
      case 6:
        if (len >= 2) {
          const size_t pos = rng.Below(len - 1);
          const bool be = rng.Coin();
          const uint32_t d = static_cast<uint32_t>(1 + rng.Below(kArithMax));
          uint32_t v = Load(out, pos, 2, be);
          v = rng.Coin() ? v + d : v - d;
          Store(out, pos, 2, be, v & 0xFFFF);
        }
        break;
      case 7:
        if (len >= 4) {
          const size_t pos = rng.Below(len - 3);
          const bool be = rng.Coin();
          const uint32_t d = static_cast<uint32_t>(1 + rng.Below(kArithMax));
          uint32_t v = Load(out, pos, 4, be);
          v = rng.Coin() ? v + d : v - d;
          Store(out, pos, 4, be, v);
        }
        break;
      case 8:
        out[rng.Below(len)] ^= static_cast<uint8_t>(1 + rng.Below(255));
        break;
      case 9: {  // delete block
        if (len < 2) break;
        const size_t del = BlockLen(len - 1, rng);
        const size_t from = rng.Below(len - del + 1);
        out.erase(out.begin() + from, out.begin() + from + del);
        break;
      }
      case 10: {  // insert block of constant or random bytes
        if (len >= max_input_len) break;
        const size_t ins = BlockLen(max_input_len - len, rng);
        const size_t to = rng.Below(len + 1);
        Bytes block(ins);
        if (rng.Coin()) {
          std::fill(block.begin(), block.end(),
                    static_cast<uint8_t>(rng.Below(256)));
        } else {
          for (auto& b : block) b = static_cast<uint8_t>(rng.Below(256));
        }
        out.insert(out.begin() + to, block.begin(), block.end());
        break;
      }
      case 11: {  // overwrite block with a chunk of itself or a constant
        if (len < 2) break;
        const size_t n = BlockLen(len - 1, rng);
        const size_t from = rng.Below(len - n + 1);
        const size_t to = rng.Below(len - n + 1);
        if (rng.Below(4) != 0) {
          Bytes chunk(out.begin() + from, out.begin() + from + n);
          std::copy(chunk.begin(), chunk.end(), out.begin() + to);
        } else {
          std::fill(out.begin() + to, out.begin() + to + n,
                    static_cast<uint8_t>(rng.Below(256)));
        }
        break;
      }
      case 12: {  // duplicate: insert a copy of an existing chunk
        if (len >= max_input_len) break;
        const size_t n = BlockLen(std::min(len, max_input_len - len), rng);
        const size_t from = rng.Below(len - n + 1);
        const size_t to = rng.Below(len + 1);
        Bytes chunk(out.begin() + from, out.begin() + from + n);
        out.insert(out.begin() + to, chunk.begin(), chunk.end());
        break;
      }
    }
  }
  return out;
}

Bytes SpliceAt(ByteView a, ByteView b, size_t split_a, size_t split_b,
               size_t max_input_len) {
  split_a = std::min(split_a, a.size());
  split_b = std::min(split_b, b.size());
  Bytes out(a.begin(), a.begin() + split_a);
  out.insert(out.end(), b.begin() + split_b, b.end());
  if (out.size() > max_input_len) out.resize(max_input_len);
  return out;
}

std::optional<Bytes> Splice(ByteView a, ByteView b, size_t max_input_len,
                            Rng& rng) {
  if (a.empty() || b.empty() || Equal(a, b)) return std::nullopt;
  const size_t split_a = 1 + rng.Below(a.size());
  const size_t split_b = rng.Below(b.size());
  return SpliceAt(a, b, split_a, split_b, max_input_len);
}

}  // namespace sidefuzz
