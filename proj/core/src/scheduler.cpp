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

#include "asrkit/scheduler.hpp"

#include <cmath>
#include <numbers>

#include "asrkit/error.hpp"
#include "asrkit/text_format.hpp"

namespace asrkit {
namespace {

constexpr double kSumTolerance = 1e-12;

double sum_of(const WeightMap& w) {
  double s = 0.0;
  for (const auto& [_, v] : w) s += v;
  return s;
}

void check_distribution(const WeightMap& w, const char* name) {
  if (w.empty()) throw ValidationError(std::string("schedule: ") + name + " is empty");
  for (const auto& [key, v] : w) {
    if (!std::isfinite(v) || v < 0.0) {
      throw ValidationError(std::string("schedule: ") + name + " weight for '" + key +
                            "' is invalid");
    }
  }
  if (std::abs(sum_of(w) - 1.0) > kSumTolerance) {
    throw ValidationError(std::string("schedule: ") + name + " does not sum to 1 (sum " +
                          format_double(sum_of(w)) + ")");
  }
}

// Fraction of the start->target gap still remaining at `step`.
double remaining_gap(ScheduleFamily family, std::int64_t step, std::int64_t total) {
  const double progress = static_cast<double>(step) / static_cast<double>(total);
  switch (family) {
    case ScheduleFamily::kCosine:
      return 0.5 * (1.0 + std::cos(std::numbers::pi * progress));
    case ScheduleFamily::kLinear:
      return 1.0 - progress;
    case ScheduleFamily::kExponential:
      return std::exp(-exponential_decay_constant() * progress);
  }
  return 0.0;
}

}  // namespace

ScheduleFamily parse_schedule_family(std::string_view name) {
  if (name == "cosine") return ScheduleFamily::kCosine;
  if (name == "linear") return ScheduleFamily::kLinear;
  if (name == "exponential") return ScheduleFamily::kExponential;
  throw ValidationError("unknown schedule family '" + std::string(name) + "'");
}

std::string_view to_string(ScheduleFamily family) {
  switch (family) {
    case ScheduleFamily::kCosine:
      return "cosine";
    case ScheduleFamily::kLinear:
      return "linear";
    case ScheduleFamily::kExponential:
      return "exponential";
  }
  return "?";
}

double exponential_decay_constant() { return std::log(1000.0); }

void ScheduleSpec::validate() const {
  if (total_steps < 1) throw ValidationError("schedule: total_steps must be >= 1");
  check_distribution(start, "start");
  check_distribution(target, "target");
  if (start.size() != target.size()) throw ValidationError("schedule: key sets differ");
  for (auto a = start.begin(), b = target.begin(); a != start.end(); ++a, ++b) {
    if (a->first != b->first) {
      throw ValidationError("schedule: key sets differ at '" + a->first + "'");
    }
  }
}

WeightMap weight_at(const ScheduleSpec& spec, std::int64_t step) {
  spec.validate();
  if (step < 0 || step > spec.total_steps) {
    throw ValidationError("schedule: step " + std::to_string(step) + " outside [0, " +
                          std::to_string(spec.total_steps) + "]");
  }
  if (step == 0) return spec.start;
  if (step == spec.total_steps && spec.family != ScheduleFamily::kExponential) {
    return spec.target;
  }

  const double gap = remaining_gap(spec.family, step, spec.total_steps);
  WeightMap out;
  double norm = 0.0;
  for (const auto& [key, target] : spec.target) {
    const double w = target + (spec.start.at(key) - target) * gap;
    out[key] = w;
    norm += w;
  }
  for (auto& [_, w] : out) w /= norm;
  return out;
}

WeightMap target_uniform(const std::vector<std::string>& group) {
  if (group.empty()) throw ValidationError("target_uniform: empty group");
  WeightMap out;
  for (const auto& key : group) out[key] = 0.0;
  if (out.size() != group.size()) throw ValidationError("target_uniform: duplicate keys");
  const double share = 1.0 / static_cast<double>(out.size());
  for (auto& [_, w] : out) w = share;
  return out;
}

void LrScheduleSpec::validate() const {
  if (!(peak_lr > 0.0) || !(min_lr > 0.0) || min_lr > peak_lr) {
    throw ValidationError("lr schedule: need 0 < min_lr <= peak_lr");
  }
  if (warmup_steps < 0) throw ValidationError("lr schedule: warmup_steps must be >= 0");
}

double lr_at(const LrScheduleSpec& spec, std::int64_t step) {
  spec.validate();
  if (step < 0) throw ValidationError("lr schedule: negative step");
  if (step < spec.warmup_steps) {
    return spec.peak_lr * static_cast<double>(step) / static_cast<double>(spec.warmup_steps);
  }
  const double reference = static_cast<double>(std::max<std::int64_t>(spec.warmup_steps, 1));
  const double at = static_cast<double>(std::max<std::int64_t>(step, 1));
  const double lr = spec.peak_lr * std::sqrt(reference / at);
  return std::max(lr, spec.min_lr);
}

std::vector<GroupWeight> group_sampler_weights(const std::vector<GroupSchedule>& groups,
                                               std::int64_t step,
                                               std::size_t expected_groups) {
  if (groups.size() != expected_groups) {
    throw ValidationError("group schedule: expected " + std::to_string(expected_groups) +
                          " groups, got " + std::to_string(groups.size()));
  }
  const double group_mass = 1.0 / static_cast<double>(groups.size());
  std::vector<GroupWeight> out;
  for (const auto& group : groups) {
    for (const auto& [key, w] : weight_at(group.spec, step)) {
      out.push_back({group.name, key, group_mass * w});
    }
  }
  return out;
}

std::vector<LanguageGroup> four_group_partition(const std::vector<LanguageKey>& keys) {
  std::vector<LanguageGroup> groups{
      {"asr_non_english", {}}, {"x_to_en", {}}, {"en_to_x", {}}, {"english_asr", {}}};
  for (const auto& key : keys) {
    if (key.is_asr()) {
      groups[key.str() == "en" ? 3 : 0].keys.push_back(key);
    } else if (key.target() == "en") {
      groups[1].keys.push_back(key);
    } else if (key.source() == "en") {
      groups[2].keys.push_back(key);
    } else {
      throw ValidationError("four_group_partition: '" + key.str() +
                            "' is neither ASR nor an English translation direction");
    }
  }
  return groups;
}

std::vector<GroupSchedule> balancing_schedules(const DataInventory& inventory,
                                               const BalanceParams& params,
                                               ScheduleFamily family, std::int64_t total_steps) {
  std::vector<GroupSchedule> out;
  for (const auto& group : four_group_partition(inventory.keys())) {
    if (group.keys.empty()) {
      throw ValidationError("balancing_schedules: group '" + group.name + "' is empty");
    }
    const auto mixture = joint_weights(inventory.subset(group.keys), params);
    GroupSchedule schedule{group.name, {family, total_steps, {}, {}}};
    std::vector<std::string> names;
    for (const auto& [key, p_l] : mixture.language) {
      schedule.spec.start[key.str()] = p_l;
      names.push_back(key.str());
    }
    schedule.spec.target = target_uniform(names);
    out.push_back(std::move(schedule));
  }
  return out;
}

}  // namespace asrkit
