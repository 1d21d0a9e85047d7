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

#include <algorithm>

#include "sidefuzz/benchmarks.h"
#include "sidefuzz/lz77.h"

namespace sidefuzz::bench {

bool PwcheckUnsafe(ByteView pub, ByteView sec, ExecutionContext& ctx) {
  ctx.Site(SiteId("pwcheck_unsafe/entry"));
  ctx.Tick();  // pub.length != sec.length
  if (pub.size() != sec.size()) {
    ctx.Site(SiteId("pwcheck_unsafe/len_mismatch"));
    ctx.Tick();
    return false;
  }
  for (size_t i = 0; i < pub.size(); ++i) {
    ctx.Site(SiteId("pwcheck_unsafe/loop"));
    ctx.Tick(2);  // guard, compare
    if (pub[i] != sec[i]) {
      ctx.Site(SiteId("pwcheck_unsafe/mismatch"));
      ctx.Tick();
      return false;
    }
  }
  ctx.Site(SiteId("pwcheck_unsafe/match"));
  return true;
}

bool PwcheckSafe(ByteView pub, ByteView sec, ExecutionContext& ctx) {
  ctx.Site(SiteId("pwcheck_safe/entry"));
  ctx.Tick();
  bool matches = true;
  [[maybe_unused]] volatile bool unused = false;
  for (size_t i = 0; i < pub.size(); ++i) {
    ctx.Site(SiteId("pwcheck_safe/loop"));
    ctx.Tick(2);  // guard, i < sec.length
    if (i < sec.size()) {
      ctx.Tick();  // compare
      if (pub[i] != sec[i]) {
        ctx.Site(SiteId("pwcheck_safe/ne"));
        ctx.Tick();
        matches = false;
      } else {
        ctx.Site(SiteId("pwcheck_safe/eq"));
        ctx.Tick();
        unused = true;
      }
    } else {
      ctx.Site(SiteId("pwcheck_safe/oob"));
      ctx.Tick(2);
      unused = false;
      unused = true;
    }
  }
  // A longer sec with pub as prefix must not match.
  ctx.Tick();
  matches = matches & (pub.size() == sec.size());
  return matches;
}

bool StringEqualsUnsafe(ByteView s1, ByteView s2, ExecutionContext& ctx) {
  ctx.Site(SiteId("string_equals/entry"));
  ctx.Tick();
  if (s1.size() != s2.size()) {
    ctx.Tick();
    return false;
  }
  for (size_t i = 0; i < s1.size(); ++i) {
    ctx.Site(SiteId("string_equals/loop"));
    ctx.Tick(2);
    if (s1[i] != s2[i]) {
      ctx.Site(SiteId("string_equals/mismatch"));
      ctx.Tick();
      return false;
    }
  }
  return true;
}

bool StringEqualsAccumulate(ByteView s1, ByteView s2, AccumulateModel model,
                            ExecutionContext& ctx) {
  ctx.Site(SiteId("string_equals_acc/entry"));
  ctx.Tick(3);  // result = true; l1; l2
  bool result = true;
  ctx.Tick();  // l1 != l2
  if (s1.size() != s2.size()) {
    ctx.Tick();
    result = false;
  }
  ctx.Tick();  // n = min(l1, l2)
  const size_t n = std::min(s1.size(), s2.size());
  for (size_t i = 0; i < n; ++i) {
    ctx.Site(SiteId("string_equals_acc/loop"));
    ctx.Tick();  // guard
    const bool eq = s1[i] == s2[i];
    if (model == AccumulateModel::kLeaky) {
      ctx.Tick(eq ? 3 : 2);
    } else {
      ctx.Tick(3);
    }
    result &= eq;
  }
  return result;
}

Bytes PadUnsafe(ByteView src, uint8_t pad_char, bool right_pad,
                size_t total_length, ExecutionContext& ctx) {
  ctx.Site(SiteId("pad_unsafe/entry"));
  ctx.Tick(2);  // srcLength; srcLength >= totalLength
  if (src.size() >= total_length) {
    ctx.Site(SiteId("pad_unsafe/early"));
    ctx.Tick();
    return Bytes(src.begin(), src.end());
  }
  ctx.Tick();  // padLength
  const size_t pad_length = total_length - src.size();
  ctx.meter().RecordAlloc(pad_length);
  Bytes sb;
  sb.reserve(pad_length);
  for (size_t i = 0; i < pad_length; ++i) {
    ctx.Site(SiteId("pad_unsafe/loop"));
    ctx.Tick(2);  // guard, append
    sb.push_back(pad_char);
  }
  ctx.Tick();  // if (rightPad)
  ctx.Tick();  // concat
  ctx.meter().RecordAlloc(total_length);
  Bytes out = right_pad ? Concat(src, sb) : Concat(sb, src);
  ctx.meter().RecordFree(total_length);
  ctx.meter().RecordFree(pad_length);
  return out;
}

Bytes PadSafe(ByteView src, uint8_t pad_char, bool right_pad,
              size_t total_length, ExecutionContext& ctx) {
  ctx.Site(SiteId("pad_safe/entry"));
  ctx.Tick(3);  // srcLength; compare; padLength
  const size_t pad_length =
      src.size() >= total_length ? 0 : total_length - src.size();
  ctx.meter().RecordAlloc(total_length);
  Bytes sb;
  sb.reserve(total_length);
  for (size_t i = 0; i < total_length; ++i) {
    ctx.Site(SiteId("pad_safe/loop"));
    ctx.Tick(2);  // guard, select
    if (i < pad_length) sb.push_back(pad_char);
  }
  ctx.Tick(2);  // side select; concat
  ctx.meter().RecordAlloc(total_length);
  Bytes out = pad_length == 0 ? Bytes(src.begin(), src.end())
              : right_pad     ? Concat(src, sb)
                              : Concat(sb, src);
  ctx.meter().RecordFree(total_length);
  ctx.meter().RecordFree(total_length);
  return out;
}

namespace {

uint64_t MulMod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t ModPow(uint64_t base, uint64_t exponent, int bits, uint64_t modulus,
                bool safe, ExecutionContext& ctx) {
  if (modulus < 2) throw HarnessError("mod_pow: modulus must be >= 2");
  ctx.Site(SiteId("mod_pow/entry"));
  ctx.Tick();
  uint64_t r = 1;
  base %= modulus;
  [[maybe_unused]] volatile uint64_t dummy = 0;
  for (int i = bits - 1; i >= 0; --i) {
    ctx.Site(SiteId("mod_pow/loop"));
    ctx.Tick(3);  // guard, square, bit test
    r = MulMod(r, r, modulus);
    if ((exponent >> i) & 1u) {
      ctx.Site(SiteId("mod_pow/multiply"));
      ctx.Tick();
      r = MulMod(r, base, modulus);
    } else if (safe) {
      ctx.Site(SiteId("mod_pow/dummy"));
      ctx.Tick();
      dummy = MulMod(r, base, modulus);
    }
  }
  ctx.Tick();
  return r;
}

}  // namespace

uint64_t ModPowUnsafe(uint64_t base, uint64_t exponent, int exponent_bits,
                      uint64_t modulus, ExecutionContext& ctx) {
  return ModPow(base, exponent, exponent_bits, modulus, false, ctx);
}

uint64_t ModPowSafe(uint64_t base, uint64_t exponent, int exponent_bits,
                    uint64_t modulus, ExecutionContext& ctx) {
  return ModPow(base, exponent, exponent_bits, modulus, true, ctx);
}

int64_t ArrayUnsafe(ByteView haystack, uint8_t needle, ExecutionContext& ctx) {
  for (size_t i = 0; i < haystack.size(); ++i) {
    ctx.Site(SiteId("array_unsafe/loop"));
    ctx.Tick(2);
    if (haystack[i] == needle) {
      ctx.Site(SiteId("array_unsafe/found"));
      ctx.Tick();
      return static_cast<int64_t>(i);
    }
  }
  ctx.Tick();
  return static_cast<int64_t>(haystack.size());
}

int64_t ArraySafe(ByteView haystack, uint8_t needle, ExecutionContext& ctx) {
  size_t found = haystack.size();
  for (size_t i = 0; i < haystack.size(); ++i) {
    ctx.Site(SiteId("array_safe/loop"));
    ctx.Tick(3);
    const bool hit = haystack[i] == needle && found == haystack.size();
    found = hit ? i : found;
  }
  ctx.Tick();
  return static_cast<int64_t>(found);
}

namespace {

void CountDown(int32_t a, ExecutionContext& ctx) {
  int32_t i = a;
  while (true) {
    ctx.Tick();  // guard
    if (i <= 0) break;
    ctx.Site(SiteId("loop_and_branch/loop"));
    ctx.Tick();  // decrement
    --i;
  }
}

int32_t WrappingAdd(int32_t a, int32_t b) {
  return static_cast<int32_t>(static_cast<uint32_t>(a) +
                              static_cast<uint32_t>(b));
}

}  // namespace

void LoopAndBranchUnsafe(int32_t a, int32_t taint, ExecutionContext& ctx) {
  ctx.Tick();
  if (taint < 0) {
    ctx.Site(SiteId("loop_and_branch_unsafe/neg"));
    CountDown(a, ctx);
  } else {
    ctx.Tick();
    if (taint > a) {
      ctx.Site(SiteId("loop_and_branch_unsafe/big"));
      CountDown(a, ctx);
    }
  }
}

void LoopAndBranchSafe(int32_t a, int32_t taint, ExecutionContext& ctx) {
  ctx.Tick();
  if (taint < 0) {
    ctx.Site(SiteId("loop_and_branch_safe/neg"));
    ctx.Tick(2);
    CountDown(a, ctx);
  } else {
    ctx.Site(SiteId("loop_and_branch_safe/pos"));
    ctx.Tick();
    const int32_t t = WrappingAdd(taint, 10);
    ctx.Tick();
    if (t >= 10) {
      CountDown(a, ctx);
    } else {
      ctx.Site(SiteId("loop_and_branch_safe/wrapped"));
    }
  }
}

bool SanityUnsafe(uint32_t a, uint32_t taint, ExecutionContext& ctx) {
  a %= kSanityBound;
  taint %= kSanityBound;
  uint32_t i = 0;
  while (true) {
    ctx.Tick();
    if (i >= taint) break;
    ctx.Site(SiteId("sanity_unsafe/loop"));
    ctx.Tick();
    ++i;
  }
  ctx.Tick();
  return i == a;
}

bool SanitySafe(uint32_t a, uint32_t taint, ExecutionContext& ctx) {
  a %= kSanityBound;
  taint %= kSanityBound;
  bool eq = false;
  uint32_t i = 0;
  while (true) {
    ctx.Tick();
    if (i >= kSanityBound) break;
    ctx.Site(SiteId("sanity_safe/loop"));
    ctx.Tick();
    eq |= (i == taint) & (i == a);
    ++i;
  }
  ctx.Tick();
  return eq;
}

int64_t StraightlineUnsafe(uint8_t a, uint8_t secret, ExecutionContext& ctx) {
  ctx.Tick();
  int64_t x = a;
  if (secret > a) {
    ctx.Site(SiteId("straightline_unsafe/taken"));
    for (int k = 0; k < kStraightlineStatements; ++k) {
      ctx.Tick();
      x = x * 3 + secret;
    }
  }
  ctx.Tick();
  return x;
}

int64_t StraightlineSafe(uint8_t a, uint8_t secret, ExecutionContext& ctx) {
  ctx.Tick();
  int64_t x = a;
  [[maybe_unused]] volatile int64_t y = a;
  if (secret > a) {
    ctx.Site(SiteId("straightline_safe/taken"));
    for (int k = 0; k < kStraightlineStatements; ++k) {
      ctx.Tick();
      x = x * 3 + secret;
    }
  } else {
    ctx.Site(SiteId("straightline_safe/dummy"));
    for (int k = 0; k < kStraightlineStatements; ++k) {
      ctx.Tick();
      y = y * 3 + secret;
    }
  }
  ctx.Tick();
  return x;
}

Bytes CrimeCompress(ByteView pub, ByteView sec, ExecutionContext& ctx) {
  ctx.Site(SiteId("crime/entry"));
  const Bytes request = Concat(pub, sec);
  return lz77::Compress(request, ctx);
}

Bytes ToyDigest(ByteView password, uint8_t salt, size_t length,
                ExecutionContext& ctx) {
  Bytes d(length);
  for (size_t i = 0; i < length; ++i) {
    ctx.Tick();
    const uint8_t p = password.empty() ? 0 : password[i % password.size()];
    d[i] = static_cast<uint8_t>(p + salt + i);
  }
  return d;
}

namespace {

std::optional<Bytes> SaltedCandidate(ByteView password, ByteView stored,
                                     ExecutionContext& ctx) {
  ctx.Tick();
  if (stored.size() < 2) {
    ctx.Tick();
    return std::nullopt;
  }
  const uint8_t salt = stored[0];
  Bytes candidate{salt};
  const Bytes digest = ToyDigest(password, salt, stored.size() - 1, ctx);
  candidate.insert(candidate.end(), digest.begin(), digest.end());
  return candidate;
}

}  // namespace

bool SaltedLoginUnsafe(ByteView password, ByteView stored,
                       ExecutionContext& ctx) {
  ctx.Site(SiteId("salted_login_unsafe/entry"));
  const auto candidate = SaltedCandidate(password, stored, ctx);
  if (!candidate) return false;
  return StringEqualsUnsafe(*candidate, stored, ctx);
}

bool SaltedLoginSafe(ByteView password, ByteView stored,
                     ExecutionContext& ctx) {
  ctx.Site(SiteId("salted_login_safe/entry"));
  const auto candidate = SaltedCandidate(password, stored, ctx);
  if (!candidate) return false;
  uint8_t diff = 0;
  for (size_t i = 0; i < stored.size(); ++i) {
    ctx.Site(SiteId("salted_login_safe/loop"));
    ctx.Tick(3);  // guard, xor, or
    diff |= static_cast<uint8_t>((*candidate)[i] ^ stored[i]);
  }
  ctx.Tick();
  return diff == 0;
}

}  // namespace sidefuzz::bench
