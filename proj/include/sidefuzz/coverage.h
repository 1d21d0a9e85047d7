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

// AFL-style edge coverage: a 64Ki bitmap of saturating hit counters indexed by
// (cur_location ^ prev_location), coarsened into nine hit-count classes.

#ifndef SIDEFUZZ_COVERAGE_H_
#define SIDEFUZZ_COVERAGE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace sidefuzz {

inline constexpr size_t kMapSize = 1 << 16;

// Instrumentation site identifier, derived from a stable site name so that
// ids do not depend on build order.
constexpr uint16_t SiteId(std::string_view name) {
  uint32_t h = 2166136261u;
  for (char c : name) {
    h ^= static_cast<uint8_t>(c);
    h *= 16777619u;
  }
  return static_cast<uint16_t>(h ^ (h >> 16));
}

// Hit-count class for a raw counter:
//   0 -> 0, 1 -> 1, 2 -> 2, 3 -> 3, 4..7 -> 4, 8..15 -> 5, 16..31 -> 6,
//   32..127 -> 7, >=128 -> 8.
constexpr uint8_t Bucketize(uint32_t raw_count) {
  if (raw_count < 4) return static_cast<uint8_t>(raw_count);
  if (raw_count < 8) return 4;
  if (raw_count < 16) return 5;
  if (raw_count < 32) return 6;
  if (raw_count < 128) return 7;
  return 8;
}

struct EdgeProbe {
  uint16_t location_id = 0;
  uint16_t prev_location = 0;

  constexpr uint16_t edge_index() const {
    return static_cast<uint16_t>(location_id ^ prev_location);
  }
};

// Raw per-execution hit counters. Tracks which indices were touched so that
// reset and classification cost O(touched) rather than O(kMapSize).
class EdgeRecorder {
 public:
  EdgeRecorder();

  // Records the edge (prev -> location) and advances prev_location.
  void Visit(uint16_t location_id) {
    RecordEdge({location_id, prev_location_});
    prev_location_ = static_cast<uint16_t>(location_id >> 1);
  }

  void RecordEdge(EdgeProbe probe) {
    const uint16_t idx = probe.edge_index();
    uint8_t& c = raw_[idx];
    if (c == 0) touched_.push_back(idx);
    if (c != 0xFF) ++c;
  }

  void Reset();

  uint8_t raw(size_t idx) const { return raw_[idx]; }
  const std::vector<uint16_t>& touched() const { return touched_; }

 private:
  std::vector<uint8_t> raw_;
  std::vector<uint16_t> touched_;
  uint16_t prev_location_ = 0;
};

// Bucket classes per index for one execution.
class CoverageMap {
 public:
  CoverageMap();

  // Replaces the contents with the classified counts of `recorder`.
  void Assign(const EdgeRecorder& recorder);
  void Clear();
  void Set(uint16_t idx, uint8_t bucket_class);

  uint8_t at(size_t idx) const { return classes_[idx]; }
  // Indices with a non-zero class, in first-touch order.
  const std::vector<uint16_t>& nonzero() const { return nonzero_; }

 private:
  std::vector<uint8_t> classes_;
  std::vector<uint16_t> nonzero_;
};

// Campaign-wide record of every (index, class) pair seen so far, stored as a
// per-index bitmask over the nine classes.
class GlobalCoverage {
 public:
  GlobalCoverage();

  bool Seen(size_t idx, uint8_t bucket_class) const {
    return (seen_[idx] >> bucket_class) & 1u;
  }
  // Number of indices with at least one non-zero class seen.
  size_t count() const { return count_; }

 private:
  friend bool HasNewCoverage(GlobalCoverage&, const CoverageMap&,
                             std::vector<std::pair<uint16_t, uint8_t>>*);
  std::vector<uint16_t> seen_;
  size_t count_ = 0;
};

// True iff `run` holds a class at some index that `global` has not seen
// there; `global` absorbs every class in `run`. Newly seen pairs are
// appended to `fresh` when it is non-null.
bool HasNewCoverage(GlobalCoverage& global, const CoverageMap& run,
                    std::vector<std::pair<uint16_t, uint8_t>>* fresh = nullptr);

}  // namespace sidefuzz

#endif  // SIDEFUZZ_COVERAGE_H_
