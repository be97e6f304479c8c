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
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace asrkit {

struct AlibiSpec {
  std::size_t seq_len = 1;
  std::size_t num_heads = 1;
  /// Uniform multiplier on every head's slope; values below 1 soften the
  /// distance penalty.
  double slope_scale = 1.0;
  /// Per-head slopes; defaults to alibi_slopes(num_heads).
  std::optional<std::vector<double>> slopes;

  void validate() const;
};

/// Geometric head slopes m_h = 2^(-8 (h + 1) / H), h = 0..H-1.
std::vector<double> alibi_slopes(std::size_t num_heads);

/// Dense H x L x L grid, bias(h, i, j) = -(m_h * slope_scale) * |i - j|.
class BiasGrid {
 public:
  BiasGrid(std::size_t heads, std::size_t len) : heads_(heads), len_(len), data_(heads * len * len) {}

  std::size_t heads() const { return heads_; }
  std::size_t len() const { return len_; }
  double& at(std::size_t h, std::size_t i, std::size_t j) { return data_[(h * len_ + i) * len_ + j]; }
  double at(std::size_t h, std::size_t i, std::size_t j) const {
    return data_[(h * len_ + i) * len_ + j];
  }

 private:
  std::size_t heads_;
  std::size_t len_;
  std::vector<double> data_;
};

/// Non-causal ALiBi: the same penalty for tokens before and after.
BiasGrid symmetric_alibi_bias(const AlibiSpec& spec);

/// CSV with header `head,i,0,1,...,L-1`, one row per (head, query).
std::string bias_grid_to_csv(const BiasGrid& grid);

struct RopeSpec {
  std::size_t head_dim = 64;
  double base = 10000.0;
  /// Positions are divided by this factor (>= 1) before rotation.
  double interp_factor = 1.0;

  void validate() const;
};

/// theta_k(p) = (p / interp_factor) * base^(-2k / d), k = 0..d/2-1.
std::vector<double> rope_angles(const RopeSpec& spec, std::int64_t position);

/// Rotates each pair (x[2k], x[2k+1]) by angles[k].
std::vector<double> apply_rope(std::span<const double> vec, std::span<const double> angles);

}  // namespace asrkit
