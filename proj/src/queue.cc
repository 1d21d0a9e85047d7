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

#include "sidefuzz/queue.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>

namespace sidefuzz {
namespace fs = std::filesystem;

namespace {

std::string Key(ByteView bytes) {
  return std::string(bytes.begin(), bytes.end());
}

}  // namespace

std::optional<size_t> CorpusQueue::Add(QueueEntry entry) {
  if (!contents_.insert(Key(entry.bytes)).second) return std::nullopt;
  entry.id = entries_.size();
  entries_.push_back(std::move(entry));
  return entries_.back().id;
}

bool CorpusQueue::Contains(ByteView bytes) const {
  return contents_.contains(Key(bytes));
}

QueueEntry& CorpusQueue::Next() {
  if (cursor_ >= cycle_end_) {
    cursor_ = 0;
    cycle_end_ = entries_.size();
  }
  return entries_[cursor_++];
}

Verdict Consider(const Candidate& c, const CoverageMap& cov1,
                 const CoverageMap& cov2, GlobalCoverage& global,
                 HighScore& high, CorpusQueue& queue) {
  std::vector<std::pair<uint16_t, uint8_t>> fresh;
  const bool new1 = HasNewCoverage(global, cov1, &fresh);
  const bool new2 = HasNewCoverage(global, cov2, &fresh);
  const uint64_t delta = c.result.delta_for(c.dimension);

  const bool beats = delta > high.value || !high.has_witness;
  if (beats && c.result.outcome != Outcome::kHarnessError) {
    high.value = delta;
    high.witness_bytes = c.bytes;
    high.witness = c.result.decoded;
    high.achieved_at = c.now;
    high.has_witness = true;
  }
  const bool strictly_higher = beats && delta > 0;
  if (!(new1 || new2 || strictly_higher)) return Verdict::kDiscarded;

  QueueEntry e;
  e.bytes = c.bytes;
  e.best_delta = delta;
  e.coverage_signature = std::move(fresh);
  e.discovered_at = c.now;
  e.parent_id = c.parent_id;
  return queue.Add(std::move(e)) ? Verdict::kEnqueued : Verdict::kDiscarded;
}

std::string EntryFileName(const QueueEntry& entry) {
  char buf[96];
  if (entry.parent_id) {
    std::snprintf(buf, sizeof(buf), "id:%06zu,src:%06zu,delta:%llu", entry.id,
                  *entry.parent_id,
                  static_cast<unsigned long long>(entry.best_delta));
  } else {
    std::snprintf(buf, sizeof(buf), "id:%06zu,src:seed,delta:%llu", entry.id,
                  static_cast<unsigned long long>(entry.best_delta));
  }
  return buf;
}

fs::path Persist(const fs::path& queue_dir, const QueueEntry& entry) {
  const fs::path p = queue_dir / EntryFileName(entry);
  WriteFile(p, entry.bytes);
  return p;
}

Bytes ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read file: " + path.string());
  Bytes data((std::istreambuf_iterator<char>(in)),
             std::istreambuf_iterator<char>());
  if (in.bad()) throw ConfigError("cannot read file: " + path.string());
  return data;
}

void WriteFile(const fs::path& path, ByteView bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw ConfigError("cannot write file: " + path.string());
}

std::vector<std::pair<std::string, Bytes>> LoadSeeds(const fs::path& seed_dir) {
  std::error_code ec;
  if (!fs::is_directory(seed_dir, ec)) {
    throw ConfigError("seed directory does not exist: " + seed_dir.string());
  }
  std::vector<fs::path> files;
  for (const auto& de : fs::directory_iterator(seed_dir)) {
    if (de.is_directory(ec)) continue;
    if (!de.is_regular_file(ec)) {
      throw ConfigError("cannot read seed file: " + de.path().string());
    }
    files.push_back(de.path());
  }
  if (files.empty()) {
    throw ConfigError("seed directory is empty: " + seed_dir.string());
  }
  std::sort(files.begin(), files.end());
  std::vector<std::pair<std::string, Bytes>> seeds;
  for (const auto& f : files) {
    seeds.emplace_back(f.filename().string(), ReadFile(f));
  }
  return seeds;
}

}  // namespace sidefuzz
