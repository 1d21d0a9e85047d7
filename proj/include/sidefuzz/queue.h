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

#ifndef SIDEFUZZ_QUEUE_H_
#define SIDEFUZZ_QUEUE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sidefuzz/bytes.h"
#include "sidefuzz/coverage.h"
#include "sidefuzz/driver.h"

namespace sidefuzz {

struct QueueEntry {
  size_t id = 0;
  Bytes bytes;
  uint64_t best_delta = 0;
  std::vector<std::pair<uint16_t, uint8_t>> coverage_signature;
  double discovered_at = 0;
  std::optional<size_t> parent_id;
  bool deterministic_done = false;
};

struct HighScore {
  uint64_t value = 0;
  Bytes witness_bytes;
  Segments witness;
  double achieved_at = 0;
  bool has_witness = false;
};

enum class Verdict { kEnqueued, kDiscarded };

// The interesting-input queue with round-robin scheduling and content
// deduplication.
class CorpusQueue {
 public:
  // Adds an entry unless identical bytes are already queued. Returns the new
  // entry's id, or nullopt for a duplicate.
  std::optional<size_t> Add(QueueEntry entry);

  bool Contains(ByteView bytes) const;

  // Round-robin: entries appended during a cycle are first visited in the
  // following one.
  QueueEntry& Next();

  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  QueueEntry& at(size_t i) { return entries_[i]; }
  const QueueEntry& at(size_t i) const { return entries_[i]; }
  const std::vector<QueueEntry>& entries() const { return entries_; }

 private:
  std::vector<QueueEntry> entries_;
  std::unordered_set<std::string> contents_;
  size_t cursor_ = 0;
  size_t cycle_end_ = 0;
};

struct Candidate {
  const Bytes& bytes;
  const DiffResult& result;
  CostDimension dimension;
  double now = 0;
  std::optional<size_t> parent_id;
};

// The enqueue rule: keep the candidate iff it reached new coverage in
// either execution or strictly beat the high score. Updates `global`
// and `high` as a side effect. `coverage` holds the two executions' maps.
Verdict Consider(const Candidate& c, const CoverageMap& cov1,
                 const CoverageMap& cov2, GlobalCoverage& global,
                 HighScore& high, CorpusQueue& queue);

// Writes the entry as raw bytes named "id:NNNN,src:PARENT,delta:D".
std::filesystem::path Persist(const std::filesystem::path& queue_dir,
                              const QueueEntry& entry);
std::string EntryFileName(const QueueEntry& entry);

// Reads every regular file in `seed_dir` in filename order. Throws
// ConfigError when the directory is missing or empty, or a file cannot be
// read.
std::vector<std::pair<std::string, Bytes>> LoadSeeds(
    const std::filesystem::path& seed_dir);

Bytes ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, ByteView bytes);

}  // namespace sidefuzz

#endif  // SIDEFUZZ_QUEUE_H_
