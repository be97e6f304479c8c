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

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "asrkit/error.hpp"

namespace asrkit {

struct ChunkOptions {
  double min_len_s = 30.0;
  double max_len_s = 40.0;
  double overlap_s = 1.0;
  double block_len_s = 3600.0;
  /// Chunk lengths are searched on a grid of 1/ticks_per_second seconds.
  /// min_len_s, max_len_s, overlap_s and block_len_s must lie on that grid.
  std::int64_t ticks_per_second = 10;
};

struct Chunk {
  std::size_t block = 0;
  std::size_t index = 0;  // within the block
  double start_s = 0.0;
  double end_s = 0.0;
};

struct BlockPlan {
  double start_s = 0.0;
  double end_s = 0.0;
  double chunk_len_s = 0.0;
  /// Seconds by which k chunks of chunk_len_s overshoot the block; the final
  /// chunk is cut short by this amount.
  double padding_s = 0.0;
  std::vector<Chunk> chunks;
};

struct ChunkPlan {
  double total_duration_s = 0.0;
  double overlap_s = 0.0;
  double block_len_s = 0.0;
  std::vector<BlockPlan> blocks;

  std::vector<Chunk> chunks() const;
};

/// Splits audio into blocks of at most block_len_s, then picks for each
/// block the chunk length on the grid that minimizes final-chunk padding
/// (using the fewest chunks that cover the block for each length). Ties go
/// to the longer chunk. Consecutive chunks overlap by exactly overlap_s.
ChunkPlan plan_chunks(double total_duration_s, const ChunkOptions& options = {});

/// Padding k * (L - overlap) + overlap - duration, evaluated on the grid.
/// Exposed so callers can score alternative plans identically.
double grid_padding(std::int64_t covered_ticks, std::int64_t ticks_per_second, double duration_s);

std::string chunk_plan_to_csv(const ChunkPlan& plan);
std::string chunk_plan_to_json(const ChunkPlan& plan);

/// Merges two consecutive chunk hypotheses.
///
/// Runs LCS between the last `window` tokens of `left` and the first
/// `window` tokens of `right`, keeps `left` up to and including the last
/// matched token and continues with `right` after its matched counterpart.
/// Without any common token the two are concatenated.
template <class Token>
std::vector<Token> merge_pair(std::span<const Token> left, std::span<const Token> right,
                              std::size_t window) {
  const std::size_t m = std::min(window, left.size());
  const std::size_t n = std::min(window, right.size());
  const std::size_t offset = left.size() - m;
  auto tail = left.subspan(offset);
  auto head = right.subspan(0, n);

  // lcs[i * (n + 1) + j] = LCS length of tail[0, i) and head[0, j).
  std::vector<std::size_t> lcs((m + 1) * (n + 1), 0);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      lcs[i * (n + 1) + j] = tail[i - 1] == head[j - 1]
                                 ? lcs[(i - 1) * (n + 1) + (j - 1)] + 1
                                 : std::max(lcs[(i - 1) * (n + 1) + j], lcs[i * (n + 1) + j - 1]);
    }
  }

  std::vector<Token> merged(left.begin(), left.end());
  if (lcs[m * (n + 1) + n] == 0) {
    merged.insert(merged.end(), right.begin(), right.end());
    return merged;
  }

  // Walk back from (m, n) to the last matched pair of one LCS.
  std::size_t i = m;
  std::size_t j = n;
  while (!(tail[i - 1] == head[j - 1] &&
           lcs[i * (n + 1) + j] == lcs[(i - 1) * (n + 1) + (j - 1)] + 1)) {
    if (lcs[(i - 1) * (n + 1) + j] >= lcs[i * (n + 1) + j - 1]) {
      --i;
    } else {
      --j;
    }
  }
  merged.resize(offset + i);
  merged.insert(merged.end(), right.begin() + static_cast<std::ptrdiff_t>(j), right.end());
  return merged;
}

template <class Token>
std::vector<Token> merge_pair(const std::vector<Token>& left, const std::vector<Token>& right,
                              std::size_t window) {
  return merge_pair(std::span<const Token>(left), std::span<const Token>(right), window);
}

template <class Token>
struct ChunkHypothesis {
  std::size_t chunk_index = 0;
  std::vector<Token> tokens;
};

inline constexpr std::size_t kDefaultMergeWindow = 20;

/// Left fold of merge_pair() in chunk order. Indices must be exactly
/// 0..n-1 (any input order); gaps or duplicates throw ValidationError.
template <class Token>
std::vector<Token> merge_all(std::vector<ChunkHypothesis<Token>> hypotheses,
                             std::size_t window = kDefaultMergeWindow) {
  std::sort(hypotheses.begin(), hypotheses.end(),
            [](const auto& a, const auto& b) { return a.chunk_index < b.chunk_index; });
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    if (hypotheses[i].chunk_index != i) {
      throw ValidationError("merge_all: chunk indices must be 0.." +
                            std::to_string(hypotheses.size() - 1) + " without gaps or "
                            "duplicates; found " + std::to_string(hypotheses[i].chunk_index) +
                            " at position " + std::to_string(i));
    }
  }
  std::vector<Token> merged;
  for (const auto& h : hypotheses) merged = merge_pair(merged, h.tokens, window);
  return merged;
}

}  // namespace asrkit
