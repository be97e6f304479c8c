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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "asrkit/manifest.hpp"

namespace asrkit {

/// Two-dimensional (duration x token count) bucket boundaries.
///
/// `duration_edges` are the interior upper boundaries: a duration d falls in
/// bin i when edges[i-1] < d <= edges[i], the first bin takes everything
/// <= edges[0] and the last bin everything above edges.back(). Token edges
/// follow the same rule within each duration bin.
struct BucketSpec {
  std::vector<double> duration_edges;
  std::vector<std::vector<std::int64_t>> token_edges;  // one list per duration bin
  std::vector<std::string> warnings;

  std::size_t duration_bins() const { return duration_edges.size() + 1; }
  std::pair<std::size_t, std::size_t> bucket_of(double duration_s,
                                                std::int64_t token_count) const;
};

/// Empirical quantile used for edges: the smallest sample x with
/// P(X <= x) >= q, for q in (0, 1]. `sorted` must be ascending.
template <class T>
T lower_quantile(std::span<const T> sorted, double q);

/// Duration edges at quantiles i/n_dur_bins, then token edges at quantiles
/// of token_count inside each duration bin. Duplicate or top-collapsing
/// edges are dropped and reported in `warnings`.
BucketSpec estimate_buckets_2d(const std::vector<ManifestEntry>& entries,
                               std::size_t n_dur_bins, std::size_t n_tok_bins);

std::string buckets_to_json(const BucketSpec& spec);

}  // namespace asrkit
