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
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "asrkit/mixer.hpp"

namespace asrkit {

/// Inverse-CDF sampler over a joint (language, corpus) distribution.
///
/// Randomness comes from std::mt19937_64, whose output sequence is fixed by
/// the C++ standard; uniforms are formed from the top 53 bits of each draw,
/// so a given seed yields the same sequence on every conforming platform.
class MixtureSampler {
 public:
  explicit MixtureSampler(const JointDistribution& joint);

  std::vector<EntryKey> sample(std::uint64_t seed, std::size_t n) const;
  /// Same draws as sample(), as indices into entries().
  std::vector<std::size_t> sample_indices(std::uint64_t seed, std::size_t n) const;

  const std::vector<EntryKey>& entries() const { return entries_; }

 private:
  std::vector<EntryKey> entries_;
  std::vector<double> cumulative_;
};

/// Uniform double in [0, 1) from the top 53 bits of one generator draw.
double uniform_from(std::mt19937_64& gen);

std::vector<EntryKey> sample_keys(const MixtureWeights& weights, std::uint64_t seed,
                                  std::size_t n);

struct BatchReport {
  std::size_t batch_index = 0;
  std::size_t distinct_language_pairs = 0;
  std::map<LanguageKey, std::size_t> per_key_counts;
};

/// Groups consecutive draws into floor(n / batch_size) full batches; a
/// trailing partial batch is dropped.
std::vector<BatchReport> compose_batches(std::span<const EntryKey> draws,
                                         std::size_t batch_size);

struct DiversitySummary {
  std::size_t min = 0;
  double median = 0.0;  // mean of the two middle values for even counts
  std::size_t max = 0;
};

DiversitySummary diversity_summary(std::span<const BatchReport> reports);

std::string batches_to_csv(std::span<const BatchReport> reports);
std::string diversity_to_csv(const DiversitySummary& summary);

}  // namespace asrkit
