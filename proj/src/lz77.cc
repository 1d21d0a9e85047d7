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

#include "sidefuzz/lz77.h"

#include <algorithm>
#include <vector>

#include "sidefuzz/driver.h"

namespace sidefuzz::lz77 {
namespace {

constexpr int kHashBits = 12;
constexpr int kMaxChain = 64;

uint32_t Hash4(const uint8_t* p) {
  const uint32_t v = uint32_t{p[0]} | uint32_t{p[1]} << 8 |
                     uint32_t{p[2]} << 16 | uint32_t{p[3]} << 24;
  return (v * 2654435761u) >> (32 - kHashBits);
}

class Encoder {
 public:
  Encoder(ByteView data, ExecutionContext* ctx) : data_(data), ctx_(ctx) {
    const uint32_t n = static_cast<uint32_t>(data.size());
    out_.reserve(kHeaderSize + n + n / kMaxLiteralRun + 1);
    for (int i = 0; i < 4; ++i)
      out_.push_back(static_cast<uint8_t>(n >> (8 * i)));
  }

  Bytes Run() {
    const size_t n = data_.size();
    std::vector<int32_t> head(size_t{1} << kHashBits, -1);
    std::vector<int32_t> prev(n, -1);
    if (ctx_) ctx_->meter().RecordAlloc(head.size() * 4 + prev.size() * 4);

    size_t pos = 0;
    while (pos < n) {
      size_t best_len = 0;
      size_t best_dist = 0;
      if (pos + kMinMatch <= n) {
        const uint32_t h = Hash4(&data_[pos]);
        int32_t cand = head[h];
        for (int chain = 0; cand >= 0 && chain < kMaxChain;
             ++chain, cand = prev[cand]) {
          const size_t dist = pos - static_cast<size_t>(cand);
          if (dist > kWindow) break;
          if (ctx_) ctx_->Tick();
          size_t len = 0;
          const size_t limit = std::min(kMaxMatch, n - pos);
          while (len < limit && data_[cand + len] == data_[pos + len]) ++len;
          if (len > best_len) {
            best_len = len;
            best_dist = dist;
            if (len == limit) break;
          }
        }
      }

      const size_t advance = best_len >= kMinMatch ? best_len : 1;
      if (best_len >= kMinMatch) {
        FlushLiterals();
        if (ctx_) {
          ctx_->Site(SiteId("lz77/match"));
          ctx_->Tick();
        }
        out_.push_back(static_cast<uint8_t>(0x80 | (best_len - kMinMatch)));
        out_.push_back(static_cast<uint8_t>(best_dist & 0xFF));
        out_.push_back(static_cast<uint8_t>(best_dist >> 8));
      } else {
        if (ctx_) ctx_->Site(SiteId("lz77/literal"));
        literals_.push_back(data_[pos]);
        if (literals_.size() == kMaxLiteralRun) FlushLiterals();
      }
      for (size_t k = 0; k < advance; ++k, ++pos) {
        if (pos + kMinMatch <= n) {
          const uint32_t h = Hash4(&data_[pos]);
          prev[pos] = head[h];
          head[h] = static_cast<int32_t>(pos);
        }
      }
    }
    FlushLiterals();
    if (ctx_) ctx_->meter().RecordFree(head.size() * 4 + prev.size() * 4);
    return std::move(out_);
  }

 private:
  void FlushLiterals() {
    if (literals_.empty()) return;
    if (ctx_) ctx_->Tick();
    out_.push_back(static_cast<uint8_t>(literals_.size() - 1));
    out_.insert(out_.end(), literals_.begin(), literals_.end());
    literals_.clear();
  }

  ByteView data_;
  ExecutionContext* ctx_;
  Bytes out_;
  Bytes literals_;
};

}  // namespace

Bytes Compress(ByteView data) { return Encoder(data, nullptr).Run(); }

Bytes Compress(ByteView data, ExecutionContext& ctx) {
  Bytes out = Encoder(data, &ctx).Run();
  ctx.meter().RecordAlloc(out.size());
  ctx.meter().RecordResponse(out.size());
  ctx.meter().RecordFree(out.size());
  return out;
}

std::optional<Bytes> Decompress(ByteView stream) {
  if (stream.size() < kHeaderSize) return std::nullopt;
  size_t n = 0;
  for (int i = 0; i < 4; ++i) n |= size_t{stream[i]} << (8 * i);
  Bytes out;
  out.reserve(n);
  size_t p = kHeaderSize;
  while (p < stream.size()) {
    const uint8_t c = stream[p++];
    if (c < 0x80) {
      const size_t run = size_t{c} + 1;
      if (p + run > stream.size()) return std::nullopt;
      out.insert(out.end(), stream.begin() + p, stream.begin() + p + run);
      p += run;
    } else {
      if (p + 2 > stream.size()) return std::nullopt;
      const size_t len = size_t{c & 0x7Fu} + kMinMatch;
      const size_t dist = size_t{stream[p]} | size_t{stream[p + 1]} << 8;
      p += 2;
      if (dist == 0 || dist > out.size()) return std::nullopt;
      const size_t from = out.size() - dist;
      for (size_t k = 0; k < len; ++k) out.push_back(out[from + k]);
    }
    if (out.size() > n) return std::nullopt;
  }
  if (out.size() != n) return std::nullopt;
  return out;
}

}  // namespace sidefuzz::lz77
