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

#include <gtest/gtest.h>

#include <set>

namespace sidefuzz {
namespace {

// The nine AFL hit-count classes written out as explicit ranges.
uint8_t ReferenceClass(uint32_t n) {
  struct Range {
    uint32_t lo, hi;
    uint8_t cls;
  };
  static constexpr Range kRanges[] = {
      {0, 0, 0},  {1, 1, 1},   {2, 2, 2},    {3, 3, 3},           {4, 7, 4},
      {8, 15, 5}, {16, 31, 6}, {32, 127, 7}, {128, UINT32_MAX, 8}};
  for (const Range& r : kRanges) {
    if (n >= r.lo && n <= r.hi) return r.cls;
  }
  return 255;
}

TEST(BucketizeTest, Examples) {
  EXPECT_EQ(Bucketize(0), 0);
  EXPECT_EQ(Bucketize(5), 4);
  EXPECT_EQ(Bucketize(200), 8);
}

TEST(BucketizeTest, MatchesPartitionUpTo1024) {
  for (uint32_t n = 0; n <= 1024; ++n) {
    ASSERT_EQ(Bucketize(n), ReferenceClass(n)) << n;
  }
}

TEST(BucketizeTest, MonotoneAndNineClasses) {
  std::set<uint8_t> classes;
  for (uint32_t n = 0; n <= 1024; ++n) {
    if (n > 0) ASSERT_GE(Bucketize(n), Bucketize(n - 1));
    classes.insert(Bucketize(n));
  }
  EXPECT_EQ(classes.size(), 9u);
}

TEST(EdgeRecorderTest, SingleAndRepeatedHits) {
  EdgeRecorder rec;
  const EdgeProbe probe{0x1234, 0x0042};
  rec.RecordEdge(probe);
  EXPECT_EQ(rec.raw(probe.edge_index()), 1);
  rec.RecordEdge(probe);
  EXPECT_EQ(rec.raw(probe.edge_index()), 2);
}

TEST(EdgeRecorderTest, CollidingProbesShareIndex) {
  EdgeRecorder rec;
  const EdgeProbe a{0x00F0, 0x000F};
  const EdgeProbe b{0x00FF, 0x0000};
  ASSERT_EQ(a.edge_index(), b.edge_index());
  rec.RecordEdge(a);
  rec.RecordEdge(b);
  EXPECT_EQ(rec.raw(a.edge_index()), 2);
}

TEST(EdgeRecorderTest, SaturatesAt255) {
  EdgeRecorder rec;
  for (int i = 0; i < 300; ++i) rec.RecordEdge({7, 0});
  EXPECT_EQ(rec.raw(7), 255);
}

TEST(EdgeRecorderTest, VisitUsesShiftedPreviousLocation) {
  EdgeRecorder rec;
  rec.Visit(0x0010);
  rec.Visit(0x0100);
  EXPECT_EQ(rec.raw(0x0010), 1);  // 0x0010 ^ 0
  EXPECT_EQ(rec.raw(0x0100 ^ 0x0008), 1);
  rec.Reset();
  EXPECT_EQ(rec.raw(0x0010), 0);
  EXPECT_TRUE(rec.touched().empty());
}

TEST(CoverageMapTest, AssignBucketizes) {
  EdgeRecorder rec;
  for (int i = 0; i < 5; ++i) rec.RecordEdge({3, 0});
  rec.RecordEdge({9, 0});
  CoverageMap map;
  map.Assign(rec);
  EXPECT_EQ(map.at(3), 4);
  EXPECT_EQ(map.at(9), 1);
  EXPECT_EQ(map.at(4), 0);
  EXPECT_EQ(map.nonzero().size(), 2u);
}

TEST(HasNewCoverageTest, EmptyGlobalSeesNewEdge) {
  GlobalCoverage global;
  CoverageMap run;
  run.Set(11, 1);
  EXPECT_TRUE(HasNewCoverage(global, run));
  EXPECT_EQ(global.count(), 1u);
}

TEST(HasNewCoverageTest, IdenticalRunIsNotNew) {
  GlobalCoverage global;
  CoverageMap run;
  run.Set(11, 1);
  run.Set(12, 3);
  ASSERT_TRUE(HasNewCoverage(global, run));
  EXPECT_FALSE(HasNewCoverage(global, run));
}

TEST(HasNewCoverageTest, HitCountEscalationIsNew) {
  GlobalCoverage global;
  CoverageMap first;
  first.Set(20, 1);
  ASSERT_TRUE(HasNewCoverage(global, first));
  CoverageMap second;
  second.Set(20, 4);
  std::vector<std::pair<uint16_t, uint8_t>> fresh;
  EXPECT_TRUE(HasNewCoverage(global, second, &fresh));
  ASSERT_EQ(fresh.size(), 1u);
  EXPECT_EQ(fresh[0], (std::pair<uint16_t, uint8_t>{20, 4}));
  EXPECT_TRUE(global.Seen(20, 1));
  EXPECT_TRUE(global.Seen(20, 4));
}

TEST(SiteIdTest, DistinctNamesUsuallyDiffer) {
  static_assert(SiteId("a") != SiteId("b"));
  EXPECT_EQ(SiteId("pwcheck/loop"), SiteId("pwcheck/loop"));
}

}  // namespace
}  // namespace sidefuzz
