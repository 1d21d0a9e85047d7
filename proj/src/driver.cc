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

#include "sidefuzz/driver.h"

#include <algorithm>
#include <exception>

namespace sidefuzz {
namespace {

constexpr std::string_view kDigits = "0123456789";
constexpr std::string_view kHex = "0123456789abcdef";
constexpr std::string_view kAlnum =
    "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

}  // namespace

std::string_view CharsetName(Charset c) {
  switch (c) {
    case Charset::kAny:
      return "any";
    case Charset::kBinary:
      return "binary";
    case Charset::kDigits:
      return "digits";
    case Charset::kHex:
      return "hex";
    case Charset::kAlnum:
      return "alnum";
    case Charset::kPrintable:
      return "printable";
  }
  return "?";
}

std::optional<Charset> ParseCharset(std::string_view name) {
  for (Charset c : {Charset::kAny, Charset::kBinary, Charset::kDigits,
                    Charset::kHex, Charset::kAlnum, Charset::kPrintable}) {
    if (CharsetName(c) == name) return c;
  }
  return std::nullopt;
}

uint8_t MapToCharset(uint8_t b, Charset c) {
  switch (c) {
    case Charset::kAny:
      return b;
    case Charset::kBinary:
      return b % 2;
    case Charset::kDigits:
      return static_cast<uint8_t>(kDigits[b % kDigits.size()]);
    case Charset::kHex:
      return static_cast<uint8_t>(kHex[b % kHex.size()]);
    case Charset::kAlnum:
      return static_cast<uint8_t>(kAlnum[b % kAlnum.size()]);
    case Charset::kPrintable:
      return static_cast<uint8_t>(0x20 + b % 95);  // ' '..'~'
  }
  return b;
}

std::optional<Segments> DefaultParse(ByteView input, const Constraints& c) {
  const size_t avail = std::min(input.size(), 3 * c.segment_cap);
  const size_t len = avail / 3;
  if (len == 0) return std::nullopt;
  auto take = [&](size_t k) {
    Bytes seg(input.begin() + k * len, input.begin() + (k + 1) * len);
    for (auto& b : seg) b = MapToCharset(b, c.charset);
    return seg;
  };
  return Segments{take(0), take(1), take(2)};
}

std::string_view OutcomeName(Outcome o) {
  switch (o) {
    case Outcome::kOk:
      return "ok";
    case Outcome::kOutputMismatch:
      return "output_mismatch_note";
    case Outcome::kParseReject:
      return "parse_reject";
    case Outcome::kHarnessError:
      return "harness_error";
  }
  return "?";
}

DriverRunner::DriverRunner(const DriverSpec& spec, bool record_coverage)
    : spec_(spec), record_coverage_(record_coverage) {}

bool DriverRunner::Execute(ByteView pub, ByteView sec, Bytes& output,
                           CostReading& cost, CoverageMap& cov,
                           std::string& error) {
  meter_.Clear();
  edges_.Reset();
  ExecutionContext ctx(meter_, record_coverage_ ? &edges_ : nullptr);
  bool ok = true;
  try {
    output = spec_.target(pub, sec, ctx);
  } catch (const std::exception& e) {
    error = e.what();
    ok = false;
  }
  cost = meter_.reading();
  if (record_coverage_) cov.Assign(edges_);
  return ok;
}

DiffResult DriverRunner::Run(ByteView input) {
  DiffResult r;
  auto parsed = spec_.parse(input, spec_.constraints);
  if (!parsed) {
    r.outcome = Outcome::kParseReject;
    coverage_[0].Clear();
    coverage_[1].Clear();
    return r;
  }
  r.decoded = std::move(*parsed);

  Bytes out1, out2;
  const bool ok1 = Execute(r.decoded.pub, r.decoded.sec1, out1, r.cost1,
                           coverage_[0], r.error);
  const bool ok2 = Execute(r.decoded.pub, r.decoded.sec2, out2, r.cost2,
                           coverage_[1], r.error);
  if (!ok1 || !ok2) {
    // Costs of an aborted run are partial; no delta is claimed from them.
    r.outcome = Outcome::kHarnessError;
    return r;
  }
  r.delta = AbsDiff(r.cost1, r.cost2);
  r.outcome = out1 == out2 ? Outcome::kOk : Outcome::kOutputMismatch;
  return r;
}

DiffResult RunDriver(const DriverSpec& spec, ByteView input) {
  DriverRunner runner(spec, /*record_coverage=*/false);
  return runner.Run(input);
}

}  // namespace sidefuzz
