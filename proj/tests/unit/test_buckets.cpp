// Copyright (c) 2026, The asrkit Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "asrkit/buckets.hpp"
#include "asrkit/error.hpp"
#include "oracles.hpp"

namespace asrkit {
namespace {

ManifestEntry entry(double duration, std::optional<std::int64_t> tokens = {}) {
  return {"a", duration, "de", "de", "c", "t", tokens};
}

TEST(Quantile, MatchesBruteForce) {
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<int> value(0, 40);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> xs(1 + trial % 37);
    for (auto& x : xs) x = value(gen) * 0.25;
    auto sorted = xs;
    std::sort(sorted.begin(), sorted.end());
    for (double q : {0.01, 0.1, 0.25, 1.0 / 3.0, 0.5, 0.75, 0.9, 1.0}) {
      EXPECT_EQ(lower_quantile<double>(sorted, q), oracle::brute_quantile(xs, q));
    }
  }
}

TEST(Buckets, SingleBucket) {
  const auto spec = estimate_buckets_2d({entry(1.0), entry(30.0)}, 1, 1);
  EXPECT_TRUE(spec.duration_edges.empty());
  EXPECT_EQ(spec.duration_bins(), 1u);
  EXPECT_EQ(spec.bucket_of(0.5, 0), (std::pair<std::size_t, std::size_t>{0, 0}));
  EXPECT_EQ(spec.bucket_of(99.0, 0).first, 0u);
}

TEST(Buckets, QuartileEdges) {
  std::vector<ManifestEntry> entries;
  std::vector<double> durations;
  for (int i = 1; i <= 100; ++i) {
    entries.push_back(entry(i));
    durations.push_back(i);
  }
  const auto spec = estimate_buckets_2d(entries, 4, 1);
  const std::vector<double> expected{oracle::brute_quantile(durations, 0.25),
                                     oracle::brute_quantile(durations, 0.5),
                                     oracle::brute_quantile(durations, 0.75)};
  EXPECT_EQ(spec.duration_edges, expected);
  EXPECT_EQ(spec.duration_edges, (std::vector<double>{25.0, 50.0, 75.0}));
  EXPECT_EQ(spec.bucket_of(25.0, 0).first, 0u);  // upper-inclusive
  EXPECT_EQ(spec.bucket_of(25.5, 0).first, 1u);
  EXPECT_EQ(spec.bucket_of(100.0, 0).first, 3u);
  EXPECT_TRUE(spec.warnings.empty());
}

TEST(Buckets, DegenerateEdgesCollapse) {
  const auto spec = estimate_buckets_2d({entry(4.0), entry(4.0)}, 2, 1);
  EXPECT_EQ(spec.duration_bins(), 1u);
  ASSERT_EQ(spec.warnings.size(), 1u);
}

TEST(Buckets, TokenEdgesPerDurationBin) {
  std::vector<ManifestEntry> entries;
  for (int i = 1; i <= 40; ++i) entries.push_back(entry(i, i <= 20 ? i : 100 + i));
  const auto spec = estimate_buckets_2d(entries, 2, 2);
  ASSERT_EQ(spec.duration_edges, (std::vector<double>{20.0}));
  EXPECT_EQ(spec.token_edges[0], (std::vector<std::int64_t>{10}));
  EXPECT_EQ(spec.token_edges[1], (std::vector<std::int64_t>{130}));
  EXPECT_EQ(spec.bucket_of(35.0, 131), (std::pair<std::size_t, std::size_t>{1, 1}));
}

TEST(Buckets, Validation) {
  EXPECT_THROW(estimate_buckets_2d({}, 2, 1), ValidationError);
  EXPECT_THROW(estimate_buckets_2d({entry(1.0)}, 0, 1), ValidationError);
  EXPECT_THROW(estimate_buckets_2d({entry(1.0)}, 1, 2), ValidationError);
}

}  // namespace
}  // namespace asrkit
