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
#include <string>
#include <string_view>
#include <vector>

#include "asrkit/inventory.hpp"
#include "asrkit/mixer.hpp"

namespace asrkit {

using WeightMap = std::map<std::string, double>;

enum class ScheduleFamily { kCosine, kLinear, kExponential };

ScheduleFamily parse_schedule_family(std::string_view name);
std::string_view to_string(ScheduleFamily family);

/// Decay constant of the exponential family: the start->target gap shrinks
/// to exp(-k) = 1e-3 of its initial size at the last step.
double exponential_decay_constant();

/// Interpolation of sampling weights from `start` to `target` over
/// `total_steps` dataloader steps.
struct ScheduleSpec {
  ScheduleFamily family = ScheduleFamily::kCosine;
  std::int64_t total_steps = 1;
  WeightMap start;
  WeightMap target;

  /// Same key sets, nonnegative weights each summing to 1 (1e-12), T >= 1.
  void validate() const;
};

/// Weights at `step` in [0, total_steps]. Step 0 returns `start` verbatim;
/// for cosine and linear the last step returns `target` verbatim. Interior
/// steps are renormalized to sum to one.
WeightMap weight_at(const ScheduleSpec& spec, std::int64_t step);

/// 1/|group| for every key.
WeightMap target_uniform(const std::vector<std::string>& group);

struct LrScheduleSpec {
  double peak_lr = 2e-5;
  double min_lr = 1e-6;
  std::int64_t warmup_steps = 0;

  void validate() const;
};

/// Linear warmup to `peak_lr`, then peak * sqrt(warmup / step) floored at
/// `min_lr`. Without warmup the decay is referenced to step 1.
double lr_at(const LrScheduleSpec& spec, std::int64_t step);

struct GroupSchedule {
  std::string name;
  ScheduleSpec spec;
};

struct GroupWeight {
  std::string group;
  std::string key;
  double weight = 0.0;
};

/// Equal mass per group, distributed inside each group by weight_at().
/// Throws unless exactly `expected_groups` groups are given.
std::vector<GroupWeight> group_sampler_weights(const std::vector<GroupSchedule>& groups,
                                               std::int64_t step,
                                               std::size_t expected_groups = 4);

struct LanguageGroup {
  std::string name;
  std::vector<LanguageKey> keys;
};

/// Splits keys into non-English ASR, X->En, En->X and English ASR groups,
/// in that order. Empty groups are kept so the count is always four.
std::vector<LanguageGroup> four_group_partition(const std::vector<LanguageKey>& keys);

/// Per-group schedules whose start weights are the language distribution of
/// joint_weights() on the group's sub-inventory and whose targets are
/// uniform over the group.
std::vector<GroupSchedule> balancing_schedules(const DataInventory& inventory,
                                               const BalanceParams& params,
                                               ScheduleFamily family, std::int64_t total_steps);

}  // namespace asrkit
