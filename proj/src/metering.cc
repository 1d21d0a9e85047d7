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

#include "sidefuzz/metering.h"

#include <algorithm>
#include <string>

#include "sidefuzz/bytes.h"

namespace sidefuzz {

std::string_view DimensionName(CostDimension dim) {
  switch (dim) {
    case CostDimension::kOps:
      return "ops";
    case CostDimension::kPeakMem:
      return "mem";
    case CostDimension::kResponseBytes:
      return "response";
  }
  return "?";
}

std::optional<CostDimension> ParseDimension(std::string_view name) {
  if (name == "ops") return CostDimension::kOps;
  if (name == "mem") return CostDimension::kPeakMem;
  if (name == "response") return CostDimension::kResponseBytes;
  return std::nullopt;
}

static uint64_t AbsDiff(uint64_t a, uint64_t b) {
  return a > b ? a - b : b - a;
}

CostReading AbsDiff(const CostReading& a, const CostReading& b) {
  return {AbsDiff(a.ops, b.ops), AbsDiff(a.peak_mem, b.peak_mem),
          AbsDiff(a.response_bytes, b.response_bytes)};
}

void Meter::RecordAlloc(uint64_t bytes) {
  live_mem_ += bytes;
  current_.peak_mem = std::max(current_.peak_mem, live_mem_);
}

void Meter::RecordFree(uint64_t bytes) {
  if (bytes > live_mem_) {
    throw HarnessError("metered free of " + std::to_string(bytes) +
                       " bytes exceeds live " + std::to_string(live_mem_));
  }
  live_mem_ -= bytes;
}

}  // namespace sidefuzz
