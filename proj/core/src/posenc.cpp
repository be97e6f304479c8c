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

#include "asrkit/posenc.hpp"

#include <cmath>
#include <sstream>

#include "asrkit/error.hpp"
#include "asrkit/text_format.hpp"

namespace asrkit {

void AlibiSpec::validate() const {
  if (seq_len < 1 || num_heads < 1) throw ValidationError("alibi: seq_len and num_heads must be >= 1");
  if (!(slope_scale > 0.0) || !std::isfinite(slope_scale)) {
    throw ValidationError("alibi: slope_scale must be positive");
  }
  if (slopes) {
    if (slopes->size() != num_heads) {
      throw ValidationError("alibi: expected " + std::to_string(num_heads) + " slopes, got " +
                            std::to_string(slopes->size()));
    }
    for (double m : *slopes) {
      if (!(m > 0.0) || !std::isfinite(m)) throw ValidationError("alibi: slopes must be positive");
    }
  }
}

std::vector<double> alibi_slopes(std::size_t num_heads) {
  if (num_heads == 0) throw ValidationError("alibi: num_heads must be >= 1");
  std::vector<double> slopes(num_heads);
  const double heads = static_cast<double>(num_heads);
  for (std::size_t h = 0; h < num_heads; ++h) {
    slopes[h] = std::exp2(-8.0 * static_cast<double>(h + 1) / heads);
  }
  return slopes;
}

BiasGrid symmetric_alibi_bias(const AlibiSpec& spec) {
  spec.validate();
  const std::vector<double> slopes = spec.slopes ? *spec.slopes : alibi_slopes(spec.num_heads);
  BiasGrid grid(spec.num_heads, spec.seq_len);
  for (std::size_t h = 0; h < spec.num_heads; ++h) {
    const double m = slopes[h] * spec.slope_scale;
    for (std::size_t i = 0; i < spec.seq_len; ++i) {
      for (std::size_t j = 0; j < spec.seq_len; ++j) {
        const std::size_t distance = i > j ? i - j : j - i;
        grid.at(h, i, j) = distance == 0 ? 0.0 : -m * static_cast<double>(distance);
      }
    }
  }
  return grid;
}

std::string bias_grid_to_csv(const BiasGrid& grid) {
  std::ostringstream out;
  out << "head,i";
  for (std::size_t j = 0; j < grid.len(); ++j) out << ',' << j;
  out << '\n';
  for (std::size_t h = 0; h < grid.heads(); ++h) {
    for (std::size_t i = 0; i < grid.len(); ++i) {
      out << h << ',' << i;
      for (std::size_t j = 0; j < grid.len(); ++j) out << ',' << format_double(grid.at(h, i, j));
      out << '\n';
    }
  }
  return out.str();
}

void RopeSpec::validate() const {
  if (head_dim == 0 || head_dim % 2 != 0) throw ValidationError("rope: head_dim must be even and positive");
  if (!(base > 0.0) || !std::isfinite(base)) throw ValidationError("rope: base must be positive");
  if (!(interp_factor >= 1.0) || !std::isfinite(interp_factor)) {
    throw ValidationError("rope: interp_factor must be >= 1");
  }
}

std::vector<double> rope_angles(const RopeSpec& spec, std::int64_t position) {
  spec.validate();
  if (position < 0) throw ValidationError("rope: position must be nonnegative");
  const double scaled = static_cast<double>(position) / spec.interp_factor;
  const double dim = static_cast<double>(spec.head_dim);
  std::vector<double> angles(spec.head_dim / 2);
  for (std::size_t k = 0; k < angles.size(); ++k) {
    angles[k] = scaled * std::pow(spec.base, -2.0 * static_cast<double>(k) / dim);
  }
  return angles;
}

std::vector<double> apply_rope(std::span<const double> vec, std::span<const double> angles) {
  if (vec.size() != 2 * angles.size()) {
    throw ValidationError("rope: vector of length " + std::to_string(vec.size()) +
                          " needs " + std::to_string(vec.size() / 2) + " angles, got " +
                          std::to_string(angles.size()));
  }
  std::vector<double> out(vec.size());
  for (std::size_t k = 0; k < angles.size(); ++k) {
    const double c = std::cos(angles[k]);
    const double s = std::sin(angles[k]);
    const double x = vec[2 * k];
    const double y = vec[2 * k + 1];
    out[2 * k] = x * c - y * s;
    out[2 * k + 1] = x * s + y * c;
  }
  return out;
}

}  // namespace asrkit
