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

// Driver wrappers: how each target decodes (pub, sec) byte segments, and the
// statistic-based domains used by the structured oracle.

#include <algorithm>
#include <bit>
#include <string>

#include "sidefuzz/benchmarks.h"

namespace sidefuzz::bench {
namespace {

// 2^61 - 1, prime.
constexpr uint64_t kModPowModulus = (uint64_t{1} << 61) - 1;

Bytes Out(bool v) { return Bytes{static_cast<uint8_t>(v)}; }

Bytes Out(uint64_t v) {
  Bytes b(8);
  for (int i = 0; i < 8; ++i) b[i] = static_cast<uint8_t>(v >> (8 * i));
  return b;
}

Bytes Out(int64_t v) { return Out(static_cast<uint64_t>(v)); }

// Prefix before the first NUL, C-string style.
ByteView UntilNul(ByteView b) {
  const auto it = std::find(b.begin(), b.end(), uint8_t{0});
  return b.first(static_cast<size_t>(it - b.begin()));
}

uint8_t MinSymbol(ByteView alphabet) {
  return *std::min_element(alphabet.begin(), alphabet.end());
}
uint8_t MaxSymbol(ByteView alphabet) {
  return *std::max_element(alphabet.begin(), alphabet.end());
}

// Secrets that agree with `pub` on exactly the first k positions and then
// differ, for k = 0..len-1, plus pub itself.
StructuredDomain MatchPrefixDomain() {
  return {"match-prefix length", [](size_t len, ByteView alphabet) {
            const uint8_t same = alphabet[0];
            StructuredCase c{Bytes(len, same), {}};
            if (alphabet.size() >= 2) {
              const uint8_t other = alphabet[1];
              for (size_t k = 0; k < len; ++k) {
                Bytes s(len, same);
                s[k] = other;
                c.secrets.push_back(std::move(s));
              }
            }
            c.secrets.push_back(c.pub);
            return std::vector<StructuredCase>{c};
          }};
}

// Secrets agreeing with pub on the first m positions and differing on the
// rest, m = 0..len. The accumulate model depends only on how many agree.
StructuredDomain MatchCountDomain() {
  return {"matching-position count", [](size_t len, ByteView alphabet) {
            const uint8_t same = alphabet[0];
            const uint8_t other = alphabet.size() >= 2 ? alphabet[1] : same;
            StructuredCase c{Bytes(len, same), {}};
            for (size_t m = 0; m <= len; ++m) {
              Bytes s(len, other);
              std::fill(s.begin(), s.begin() + m, same);
              c.secrets.push_back(std::move(s));
            }
            return std::vector<StructuredCase>{c};
          }};
}

StructuredDomain SrcLengthDomain() {
  return {"source length before NUL", [](size_t len, ByteView alphabet) {
            const uint8_t hi = MaxSymbol(alphabet);
            const bool has_nul = MinSymbol(alphabet) == 0;
            StructuredCase c{Bytes(len, hi), {}};
            if (hi == 0 || !has_nul) {
              c.secrets.push_back(Bytes(len, MinSymbol(alphabet)));
            } else {
              for (size_t k = 0; k <= len; ++k) {
                Bytes s(len, 0);
                std::fill(s.begin(), s.begin() + k, hi);
                c.secrets.push_back(std::move(s));
              }
            }
            return std::vector<StructuredCase>{c};
          }};
}

StructuredDomain PopcountDomain() {
  return {"exponent popcount", [](size_t len, ByteView alphabet) {
            auto by_pop = [](uint8_t x, uint8_t y) {
              return std::popcount(x) < std::popcount(y);
            };
            const uint8_t lo =
                *std::min_element(alphabet.begin(), alphabet.end(), by_pop);
            const uint8_t hi =
                *std::max_element(alphabet.begin(), alphabet.end(), by_pop);
            StructuredCase c{Bytes(len, alphabet[0]), {}};
            for (size_t k = 0; k <= len; ++k) {
              Bytes s(len, lo);
              std::fill(s.begin(), s.begin() + k, hi);
              c.secrets.push_back(std::move(s));
            }
            return std::vector<StructuredCase>{c};
          }};
}

StructuredDomain NeedlePositionDomain() {
  return {"needle first-occurrence index", [](size_t len, ByteView alphabet) {
            std::vector<StructuredCase> cases;
            // Uniform haystack: needle found at 0 or absent.
            StructuredCase uniform{Bytes(len, alphabet[0]), {}};
            for (uint8_t a : alphabet) uniform.secrets.push_back(Bytes(len, a));
            cases.push_back(std::move(uniform));
            // Staircase haystack: needle alphabet[1] first at position k.
            if (alphabet.size() >= 2) {
              for (size_t k = 0; k < len; ++k) {
                StructuredCase c{Bytes(len, alphabet[0]), {}};
                c.pub[k] = alphabet[1];
                c.secrets = {Bytes(len, alphabet[0]), Bytes(len, alphabet[1])};
                cases.push_back(std::move(c));
              }
            }
            return cases;
          }};
}

StructuredDomain BranchOutcomeDomain() {
  return {"secret > public branch", [](size_t len, ByteView alphabet) {
            const uint8_t lo = MinSymbol(alphabet);
            const uint8_t hi = MaxSymbol(alphabet);
            StructuredCase c{Bytes(len, lo), {Bytes(len, lo), Bytes(len, hi)}};
            return std::vector<StructuredCase>{c};
          }};
}

Constraints Cap(size_t cap) { return Constraints{cap, Charset::kAny}; }

std::vector<Benchmark> BuildRegistry() {
  std::vector<Benchmark> r;

  r.push_back({"pwcheck_unsafe", "pwcheck", "unsafe",
               "1 length check (+1 early return); 2 per iteration (guard, "
               "compare); +1 on mismatch return",
               CostDimension::kOps, Cap(16),
               [](ByteView pub, ByteView sec, ExecutionContext& ctx) {
                 return Out(PwcheckUnsafe(pub, sec, ctx));
               },
               MatchPrefixDomain()});
  r.push_back({"pwcheck_safe", "pwcheck", "safe",
               "1 init; 4 per iteration on every path; 1 length fold",
               CostDimension::kOps, Cap(16),
               [](ByteView pub, ByteView sec, ExecutionContext& ctx) {
                 return Out(PwcheckSafe(pub, sec, ctx));
               },
               MatchPrefixDomain()});

  r.push_back({"jetty_unsafe", "string_equals_jetty", "unsafe",
               "String.equals: 1 length check; 2 per iteration; +1 on "
               "mismatch return",
               CostDimension::kOps, Cap(16),
               [](ByteView pub, ByteView sec, ExecutionContext& ctx) {
                 return Out(StringEqualsUnsafe(pub, sec, ctx));
               },
               MatchPrefixDomain()});
  r.push_back({"jetty_safe_leaky", "string_equals_jetty", "safe-leaky",
               "5 setup; per iteration 1 guard + accumulate (3 if equal, 2 "
               "if not)",
               CostDimension::kOps, Cap(16),
               [](ByteView pub, ByteView sec, ExecutionContext& ctx) {
                 return Out(StringEqualsAccumulate(
                     pub, sec, AccumulateModel::kLeaky, ctx));
               },
               MatchCountDomain()});
  r.push_back({"jetty_safe_ct", "string_equals_jetty", "safe",
               "5 setup; per iteration 1 guard + accumulate (always 3)",
               CostDimension::kOps, Cap(16),
               [](ByteView pub, ByteView sec, ExecutionContext& ctx) {
                 return Out(StringEqualsAccumulate(
                     pub, sec, AccumulateModel::kConstant, ctx));
               },
               MatchCountDomain()});

  // pub: total length = |pub|, pad char = pub[0], right pad = pub[1] & 1.
  // sec: the source string up to its first NUL.
  auto pad = [](bool safe) {
    return [safe](ByteView pub, ByteView sec, ExecutionContext& ctx) {
      const ByteView src = UntilNul(sec);
      const bool right = pub.size() > 1 && (pub[1] & 1);
      return safe ? PadSafe(src, pub[0], right, pub.size(), ctx)
                  : PadUnsafe(src, pub[0], right, pub.size(), ctx);
    };
  };
  r.push_back({"pad_unsafe", "string_utils_pad", "unsafe",
               "2 setup; +1 early return if src >= total; else 1 + 2 per pad "
               "char + 2; mem: padLength + total",
               CostDimension::kOps, Cap(16), pad(false), SrcLengthDomain()});
  r.push_back({"pad_safe", "string_utils_pad", "safe",
               "3 setup; 2 per position of total; 2 finish; mem: 2 * total",
               CostDimension::kOps, Cap(16), pad(true), SrcLengthDomain()});

  // pub: base (big-endian, up to 8 bytes); sec: exponent (big-endian, up to
  // 8 bytes) of width 8 * |sec| bits; modulus fixed at 2^61 - 1.
  auto mod_pow = [](bool safe) {
    return [safe](ByteView pub, ByteView sec, ExecutionContext& ctx) {
      const uint64_t base = DecodeBigEndian(pub);
      const uint64_t e = DecodeBigEndian(sec);
      const int bits = static_cast<int>(8 * std::min<size_t>(sec.size(), 8));
      return Out(safe ? ModPowSafe(base, e, bits, kModPowModulus, ctx)
                      : ModPowUnsafe(base, e, bits, kModPowModulus, ctx));
    };
  };
  r.push_back({"mod_pow_unsafe", "mod_pow", "unsafe",
               "1 init; 3 per exponent bit; +1 multiply on set bits; 1 return",
               CostDimension::kOps, Cap(8), mod_pow(false), PopcountDomain()});
  r.push_back({"mod_pow_safe", "mod_pow", "safe",
               "1 init; 4 per exponent bit (dummy multiply on clear bits); 1 "
               "return",
               CostDimension::kOps, Cap(8), mod_pow(true), PopcountDomain()});

  // pub: haystack; sec[0]: needle.
  r.push_back({"array_unsafe", "micro", "unsafe",
               "2 per probe; +1 found return or +1 not-found return",
               CostDimension::kOps, Cap(16),
               [](ByteView pub, ByteView sec, ExecutionContext& ctx) {
                 return Out(ArrayUnsafe(pub, sec[0], ctx));
               },
               NeedlePositionDomain()});
  r.push_back({"array_safe", "micro", "safe",
               "3 per probe over the whole array; 1 return",
               CostDimension::kOps, Cap(16),
               [](ByteView pub, ByteView sec, ExecutionContext& ctx) {
                 return Out(ArraySafe(pub, sec[0], ctx));
               },
               NeedlePositionDomain()});

  // pub[0]: loop bound a; sec: taint as big-endian int32.
  r.push_back({"loop_and_branch_unsafe", "micro", "unsafe",
               "1 sign branch; loop(a) when taint < 0; else 1 + loop(a) when "
               "taint > a; loop(a) = 2a + 1",
               CostDimension::kOps, Cap(4),
               [](ByteView pub, ByteView sec, ExecutionContext& ctx) {
                 LoopAndBranchUnsafe(pub[0], DecodeInt32(sec), ctx);
                 return Bytes{};
               },
               std::nullopt});
  r.push_back({"loop_and_branch_safe", "micro", "safe",
               "1 sign branch; 2 on either side; loop(a) unless taint + 10 "
               "wraps negative",
               CostDimension::kOps, Cap(4),
               [](ByteView pub, ByteView sec, ExecutionContext& ctx) {
                 LoopAndBranchSafe(pub[0], DecodeInt32(sec), ctx);
                 return Bytes{};
               },
               std::nullopt});

  // pub, sec: big-endian integers, reduced modulo kSanityBound.
  r.push_back({"sanity_unsafe", "micro", "unsafe",
               "2 per count step up to taint; 1 final guard; 1 compare",
               CostDimension::kOps, Cap(2),
               [](ByteView pub, ByteView sec, ExecutionContext& ctx) {
                 return Out(SanityUnsafe(
                     static_cast<uint32_t>(DecodeBigEndian(pub, 4)),
                     static_cast<uint32_t>(DecodeBigEndian(sec, 4)), ctx));
               },
               std::nullopt});
  r.push_back({"sanity_safe", "micro", "safe",
               "2 per count step over the full bound; 1 final guard; 1 "
               "compare",
               CostDimension::kOps, Cap(2),
               [](ByteView pub, ByteView sec, ExecutionContext& ctx) {
                 return Out(SanitySafe(
                     static_cast<uint32_t>(DecodeBigEndian(pub, 4)),
                     static_cast<uint32_t>(DecodeBigEndian(sec, 4)), ctx));
               },
               std::nullopt});

  // pub[0]: public value; sec[0]: secret.
  r.push_back({"straightline_unsafe", "micro", "unsafe",
               "1 branch; 8 statements when secret > public; 1 return",
               CostDimension::kOps, Cap(4),
               [](ByteView pub, ByteView sec, ExecutionContext& ctx) {
                 return Out(StraightlineUnsafe(pub[0], sec[0], ctx));
               },
               BranchOutcomeDomain()});
  r.push_back({"straightline_safe", "micro", "safe",
               "1 branch; 8 statements on either side; 1 return",
               CostDimension::kOps, Cap(4),
               [](ByteView pub, ByteView sec, ExecutionContext& ctx) {
                 return Out(StraightlineSafe(pub[0], sec[0], ctx));
               },
               BranchOutcomeDomain()});

  r.push_back({"crime_compress", "crime_compress", "unsafe",
               "response = LZ77 compressed size of pub ++ sec; ops: 1 per "
               "token and per match probe",
               CostDimension::kResponseBytes, Cap(16),
               [](ByteView pub, ByteView sec, ExecutionContext& ctx) {
                 return CrimeCompress(pub, sec, ctx);
               },
               std::nullopt});

  // pub: password; sec: stored salt (1 byte) ++ digest.
  r.push_back({"salted_login_unsafe", "salted_hash_login", "unsafe",
               "1 size check; 1 per digest byte; String.equals on salt ++ "
               "digest",
               CostDimension::kOps, Cap(16),
               [](ByteView pub, ByteView sec, ExecutionContext& ctx) {
                 return Out(SaltedLoginUnsafe(pub, sec, ctx));
               },
               std::nullopt});
  r.push_back({"salted_login_safe", "salted_hash_login", "safe",
               "1 size check; 1 per digest byte; 3 per stored byte; 1 return",
               CostDimension::kOps, Cap(16),
               [](ByteView pub, ByteView sec, ExecutionContext& ctx) {
                 return Out(SaltedLoginSafe(pub, sec, ctx));
               },
               std::nullopt});
  return r;
}

}  // namespace

const std::vector<Benchmark>& Registry() {
  static const std::vector<Benchmark> registry = BuildRegistry();
  return registry;
}

const Benchmark* Find(std::string_view name) {
  for (const auto& b : Registry()) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

DriverSpec MakeDriver(const Benchmark& b) {
  DriverSpec spec;
  spec.name = b.name;
  spec.target = b.target;
  spec.dimension = b.dimension;
  spec.constraints = b.constraints;
  return spec;
}

DriverSpec MakeDriver(std::string_view name) {
  const Benchmark* b = Find(name);
  if (!b) throw ConfigError("unknown driver: " + std::string(name));
  return MakeDriver(*b);
}

}  // namespace sidefuzz::bench
