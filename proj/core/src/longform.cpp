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

#include "asrkit/longform.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "asrkit/text_format.hpp"
#include "json.hpp"

namespace asrkit {
namespace {

constexpr double kGridTolerance = 1e-9;

std::int64_t to_ticks(double seconds, std::int64_t tps, const char* name) {
  const double scaled = seconds * static_cast<double>(tps);
  const auto ticks = static_cast<std::int64_t>(std::llround(scaled));
  if (std::abs(static_cast<double>(ticks) / static_cast<double>(tps) - seconds) > kGridTolerance) {
    throw ValidationError(std::string("plan_chunks: ") + name + " = " + format_double(seconds) +
                          " is not a multiple of 1/" + std::to_string(tps) + " s");
  }
  return ticks;
}

bool covers(std::int64_t covered_ticks, std::int64_t tps, double duration_s) {
  return static_cast<double>(covered_ticks) / static_cast<double>(tps) >=
         duration_s - kGridTolerance;
}

BlockPlan plan_block(double start_s, double duration_s, std::int64_t min_t, std::int64_t max_t,
                     std::int64_t overlap_t, std::int64_t tps, std::size_t block_index) {
  std::int64_t best_len = 0;
  std::int64_t best_count = 0;
  std::int64_t best_covered = std::numeric_limits<std::int64_t>::max();

  // Longest first: a strictly smaller coverage is required to displace an
  // earlier (longer) candidate.
  for (std::int64_t len = max_t; len >= min_t; --len) {
    const std::int64_t stride = len - overlap_t;
    const double needed = duration_s * static_cast<double>(tps) - static_cast<double>(overlap_t);
    auto count = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::ceil(needed / static_cast<double>(stride))));
    while (!covers(count * stride + overlap_t, tps, duration_s)) ++count;
    while (count > 1 && covers((count - 1) * stride + overlap_t, tps, duration_s)) --count;
    const std::int64_t covered = count * stride + overlap_t;
    if (covered < best_covered) {
      best_covered = covered;
      best_len = len;
      best_count = count;
    }
  }

  const double scale = static_cast<double>(tps);
  BlockPlan block;
  block.start_s = start_s;
  block.end_s = start_s + duration_s;
  block.chunk_len_s = static_cast<double>(best_len) / scale;
  block.padding_s = grid_padding(best_covered, tps, duration_s);
  const std::int64_t stride = best_len - overlap_t;
  for (std::int64_t k = 0; k < best_count; ++k) {
    Chunk chunk;
    chunk.block = block_index;
    chunk.index = static_cast<std::size_t>(k);
    chunk.start_s = start_s + static_cast<double>(k * stride) / scale;
    chunk.end_s = k + 1 == best_count
                      ? block.end_s
                      : start_s + static_cast<double>(k * stride + best_len) / scale;
    block.chunks.push_back(chunk);
  }
  return block;
}

}  // namespace

double grid_padding(std::int64_t covered_ticks, std::int64_t ticks_per_second,
                    double duration_s) {
  const double padding =
      static_cast<double>(covered_ticks) / static_cast<double>(ticks_per_second) - duration_s;
  return std::max(padding, 0.0);
}

std::vector<Chunk> ChunkPlan::chunks() const {
  std::vector<Chunk> out;
  for (const auto& block : blocks) out.insert(out.end(), block.chunks.begin(), block.chunks.end());
  return out;
}

ChunkPlan plan_chunks(double total_duration_s, const ChunkOptions& options) {
  if (!(total_duration_s > 0.0) || !std::isfinite(total_duration_s)) {
    throw ValidationError("plan_chunks: duration must be positive");
  }
  const std::int64_t tps = options.ticks_per_second;
  if (tps < 1) throw ValidationError("plan_chunks: ticks_per_second must be >= 1");
  const std::int64_t min_t = to_ticks(options.min_len_s, tps, "min_len");
  const std::int64_t max_t = to_ticks(options.max_len_s, tps, "max_len");
  const std::int64_t overlap_t = to_ticks(options.overlap_s, tps, "overlap");
  const std::int64_t block_t = to_ticks(options.block_len_s, tps, "block_len");
  if (!(overlap_t > 0 && overlap_t < min_t && min_t <= max_t)) {
    throw ValidationError("plan_chunks: need 0 < overlap < min_len <= max_len");
  }
  if (block_t < max_t) throw ValidationError("plan_chunks: block_len must be >= max_len");

  ChunkPlan plan;
  plan.total_duration_s = total_duration_s;
  plan.overlap_s = options.overlap_s;
  plan.block_len_s = options.block_len_s;

  for (std::size_t b = 0;; ++b) {
    const double start = static_cast<double>(b) * options.block_len_s;
    if (start >= total_duration_s - kGridTolerance && b > 0) break;
    const double end = std::min(start + options.block_len_s, total_duration_s);
    plan.blocks.push_back(plan_block(start, end - start, min_t, max_t, overlap_t, tps, b));
    if (end >= total_duration_s) break;
  }
  return plan;
}

std::string chunk_plan_to_csv(const ChunkPlan& plan) {
  std::ostringstream out;
  out << "block,chunk,start_s,end_s,chunk_len_s,block_padding_s\n";
  for (const auto& block : plan.blocks) {
    for (const auto& c : block.chunks) {
      out << c.block << ',' << c.index << ',' << format_double(c.start_s) << ','
          << format_double(c.end_s) << ',' << format_double(block.chunk_len_s) << ','
          << format_double(block.padding_s) << '\n';
    }
  }
  return out.str();
}

std::string chunk_plan_to_json(const ChunkPlan& plan) {
  using nlohmann::json;
  json blocks = json::array();
  for (const auto& block : plan.blocks) {
    json chunks = json::array();
    for (const auto& c : block.chunks) chunks.push_back({c.start_s, c.end_s});
    blocks.push_back({{"start_s", block.start_s},
                      {"end_s", block.end_s},
                      {"chunk_len_s", block.chunk_len_s},
                      {"padding_s", block.padding_s},
                      {"chunks", chunks}});
  }
  json doc = {{"total_duration_s", plan.total_duration_s},
              {"overlap_s", plan.overlap_s},
              {"block_len_s", plan.block_len_s},
              {"blocks", blocks}};
  return doc.dump(2) + "\n";
}

}  // namespace asrkit
