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

#ifndef SIDEFUZZ_METERING_H_
#define SIDEFUZZ_METERING_H_

#include <cstdint>
#include <optional>
#include <string_view>

namespace sidefuzz {

// The observable costs of one execution.
//   ops            - metered operation units (instruction-count proxy)
//   peak_mem       - maximum outstanding metered allocation, in bytes
//   response_bytes - total size of declared responses, in bytes
struct CostReading {
  uint64_t ops = 0;
  uint64_t peak_mem = 0;
  uint64_t response_bytes = 0;

  friend bool operator==(const CostReading&, const CostReading&) = default;
};

enum class CostDimension { kOps, kPeakMem, kResponseBytes };

// CLI spellings: "ops", "mem", "response".
std::string_view DimensionName(CostDimension dim);
std::optional<CostDimension> ParseDimension(std::string_view name);

inline uint64_t Get(const CostReading& r, CostDimension dim) {
  switch (dim) {
    case CostDimension::kOps:
      return r.ops;
    case CostDimension::kPeakMem:
      return r.peak_mem;
    case CostDimension::kResponseBytes:
      return r.response_bytes;
  }
  return 0;
}

// Per-dimension |a - b|.
CostReading AbsDiff(const CostReading& a, const CostReading& b);

// Deterministic resource meter owned by a single execution. Targets call
// Tick() at annotated cost points and the alloc/free hooks around metered
// buffers; nothing here samples the host.
class Meter {
 public:
  void Clear() {
    current_ = {};
    live_mem_ = 0;
  }

  void Tick(uint64_t n = 1) { current_.ops += n; }

  void RecordAlloc(uint64_t bytes);
  // Throws HarnessError when freeing more than is live.
  void RecordFree(uint64_t bytes);

  void RecordResponse(uint64_t bytes) { current_.response_bytes += bytes; }

  const CostReading& reading() const { return current_; }
  uint64_t live_mem() const { return live_mem_; }

 private:
  CostReading current_;
  uint64_t live_mem_ = 0;
};

}  // namespace sidefuzz

#endif  // SIDEFUZZ_METERING_H_
