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

#include "asrkit/sampler.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "asrkit/error.hpp"
#include "asrkit/text_format.hpp"

namespace asrkit {

double uniform_from(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

MixtureSampler::MixtureSampler(const JointDistribution& joint) {
  if (joint.empty()) throw ValidationError("sampler: empty distribution");
  double running = 0.0;
  for (const auto& [key, p] : joint) {
    if (!(p >= 0.0)) throw ValidationError("sampler: negative probability");
    if (p == 0.0) continue;
    running += p;
    entries_.push_back(key);
    cumulative_.push_back(running);
  }
  if (entries_.empty()) throw ValidationError("sampler: all probabilities are zero");
}

std::vector<std::size_t> MixtureSampler::sample_indices(std::uint64_t seed,
                                                        std::size_t n) const {
  std::mt19937_64 gen(seed);
  const double total = cumulative_.back();
  std::vector<std::size_t> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = uniform_from(gen) * total;
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) --it;
    out.push_back(static_cast<std::size_t>(it - cumulative_.begin()));
  }
  return out;
}

std::vector<EntryKey> MixtureSampler::sample(std::uint64_t seed, std::size_t n) const {
  std::vector<EntryKey> out;
  out.reserve(n);
  for (std::size_t idx : sample_indices(seed, n)) out.push_back(entries_[idx]);
  return out;
}

std::vector<EntryKey> sample_keys(const MixtureWeights& weights, std::uint64_t seed,
                                  std::size_t n) {
  if (n == 0) return {};
  return MixtureSampler(weights.joint).sample(seed, n);
}

std::vector<BatchReport> compose_batches(std::span<const EntryKey> draws,
                                         std::size_t batch_size) {
  if (batch_size == 0) throw ValidationError("compose_batches: batch_size must be >= 1");
  std::vector<BatchReport> reports;
  const std::size_t full = draws.size() / batch_size;
  reports.reserve(full);
  for (std::size_t b = 0; b < full; ++b) {
    BatchReport report;
    report.batch_index = b;
    for (const auto& draw : draws.subspan(b * batch_size, batch_size)) {
      ++report.per_key_counts[draw.language];
    }
    report.distinct_language_pairs = report.per_key_counts.size();
    reports.push_back(std::move(report));
  }
  return reports;
}

DiversitySummary diversity_summary(std::span<const BatchReport> reports) {
  if (reports.empty()) throw ValidationError("diversity_summary: no batches");
  std::vector<std::size_t> counts;
  counts.reserve(reports.size());
  for (const auto& r : reports) counts.push_back(r.distinct_language_pairs);
  std::sort(counts.begin(), counts.end());
  const std::size_t n = counts.size();
  const double median = n % 2 == 1
                            ? static_cast<double>(counts[n / 2])
                            : 0.5 * static_cast<double>(counts[n / 2 - 1] + counts[n / 2]);
  return {counts.front(), median, counts.back()};
}

std::string batches_to_csv(std::span<const BatchReport> reports) {
  std::ostringstream out;
  out << "batch_index,distinct_language_pairs,draws\n";
  for (const auto& r : reports) {
    std::size_t draws = 0;
    for (const auto& [_, c] : r.per_key_counts) draws += c;
    out << r.batch_index << ',' << r.distinct_language_pairs << ',' << draws << '\n';
  }
  return out.str();
}

std::string diversity_to_csv(const DiversitySummary& summary) {
  std::ostringstream out;
  out << "min_distinct,median_distinct,max_distinct\n"
      << summary.min << ',' << format_double(summary.median) << ',' << summary.max << '\n';
  return out.str();
}

}  // namespace asrkit
