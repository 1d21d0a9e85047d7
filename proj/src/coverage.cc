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

#include "sidefuzz/coverage.h"

namespace sidefuzz {

EdgeRecorder::EdgeRecorder() : raw_(kMapSize, 0) { touched_.reserve(256); }

void EdgeRecorder::Reset() {
  for (uint16_t idx : touched_) raw_[idx] = 0;
  touched_.clear();
  prev_location_ = 0;
}

CoverageMap::CoverageMap() : classes_(kMapSize, 0) {}

void CoverageMap::Clear() {
  for (uint16_t idx : nonzero_) classes_[idx] = 0;
  nonzero_.clear();
}

void CoverageMap::Set(uint16_t idx, uint8_t bucket_class) {
  if (classes_[idx] == 0 && bucket_class != 0) nonzero_.push_back(idx);
  classes_[idx] = bucket_class;
  // Keep nonzero_ exact if a slot is explicitly zeroed.
  if (bucket_class == 0) std::erase(nonzero_, idx);
}

void CoverageMap::Assign(const EdgeRecorder& recorder) {
  Clear();
  for (uint16_t idx : recorder.touched()) {
    classes_[idx] = Bucketize(recorder.raw(idx));
    nonzero_.push_back(idx);
  }
}

GlobalCoverage::GlobalCoverage() : seen_(kMapSize, 0) {}

bool HasNewCoverage(GlobalCoverage& global, const CoverageMap& run,
                    std::vector<std::pair<uint16_t, uint8_t>>* fresh) {
  bool found = false;
  for (uint16_t idx : run.nonzero()) {
    const uint8_t cls = run.at(idx);
    const uint16_t bit = static_cast<uint16_t>(1u << cls);
    uint16_t& mask = global.seen_[idx];
    if (mask & bit) continue;
    if (mask == 0) ++global.count_;
    mask |= bit;
    found = true;
    if (fresh) fresh->emplace_back(idx, cls);
  }
  return found;
}

}  // namespace sidefuzz
