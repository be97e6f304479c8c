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

#include "asrkit/buckets.hpp"

#include <algorithm>
#include <cmath>

#include "asrkit/error.hpp"
#include "asrkit/text_format.hpp"
#include "json.hpp"

namespace asrkit {

template <class T>
T lower_quantile(std::span<const T> sorted, double q) {
  if (sorted.empty()) throw ValidationError("quantile of an empty sample");
  const double n = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(q * n - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

template double lower_quantile<double>(std::span<const double>, double);
template std::int64_t lower_quantile<std::int64_t>(std::span<const std::int64_t>, double);

namespace {

// Interior edges at quantiles i/bins, i = 1..bins-1, with duplicates and
// edges at or above the sample maximum removed (they would leave empty bins).
template <class T>
std::vector<T> quantile_edges(std::vector<T> values, std::size_t bins, const std::string& what,
                              std::vector<std::string>& warnings) {
  std::sort(values.begin(), values.end());
  std::vector<T> edges;
  std::span<const T> sorted(values);
  for (std::size_t i = 1; i < bins; ++i) {
    const T edge = lower_quantile(sorted, static_cast<double>(i) / static_cast<double>(bins));
    if (edge >= values.back()) continue;
    if (!edges.empty() && edge <= edges.back()) continue;
    edges.push_back(edge);
  }
  if (bins > 1 && edges.size() + 1 < bins) {
    warnings.push_back(what + ": requested " + std::to_string(bins) + " bins, collapsed to " +
                       std::to_string(edges.size() + 1) + " because of repeated values");
  }
  return edges;
}

template <class T>
std::size_t bin_index(const std::vector<T>& edges, T value) {
  return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), value) -
                                  edges.begin());
}

}  // namespace

std::pair<std::size_t, std::size_t> BucketSpec::bucket_of(double duration_s,
                                                          std::int64_t token_count) const {
  const std::size_t d = bin_index(duration_edges, duration_s);
  const std::size_t t = d < token_edges.size() ? bin_index(token_edges[d], token_count) : 0;
  return {d, t};
}

BucketSpec estimate_buckets_2d(const std::vector<ManifestEntry>& entries,
                               std::size_t n_dur_bins, std::size_t n_tok_bins) {
  if (n_dur_bins == 0 || n_tok_bins == 0) {
    throw ValidationError("estimate_buckets_2d: bin counts must be >= 1");
  }
  if (entries.empty()) throw ValidationError("estimate_buckets_2d: no entries");
  if (n_tok_bins > 1) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (!entries[i].token_count) {
        throw ValidationError("estimate_buckets_2d: entry " + std::to_string(i) + " ('" +
                              entries[i].audio_id + "') has no token_count");
      }
    }
  }

  BucketSpec spec;
  std::vector<double> durations;
  durations.reserve(entries.size());
  for (const auto& e : entries) durations.push_back(e.duration_s);
  spec.duration_edges = quantile_edges(durations, n_dur_bins, "duration", spec.warnings);

  std::vector<std::vector<std::int64_t>> tokens_per_bin(spec.duration_bins());
  if (n_tok_bins > 1) {
    for (const auto& e : entries) {
      tokens_per_bin[bin_index(spec.duration_edges, e.duration_s)].push_back(*e.token_count);
    }
  }
  for (std::size_t b = 0; b < tokens_per_bin.size(); ++b) {
    if (n_tok_bins == 1 || tokens_per_bin[b].empty()) {
      spec.token_edges.emplace_back();
      continue;
    }
    spec.token_edges.push_back(quantile_edges(tokens_per_bin[b], n_tok_bins,
                                              "tokens in duration bin " + std::to_string(b),
                                              spec.warnings));
  }
  return spec;
}

std::string buckets_to_json(const BucketSpec& spec) {
  nlohmann::json doc = {{"duration_edges", spec.duration_edges},
                        {"token_edges", spec.token_edges},
                        {"warnings", spec.warnings}};
  return doc.dump(2) + "\n";
}

}  // namespace asrkit
