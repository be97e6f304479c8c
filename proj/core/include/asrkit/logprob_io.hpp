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

#include <string>
#include <string_view>

#include "asrkit/aligner.hpp"

namespace asrkit {

// Binary layout, all little-endian:
//   u32 frames, u32 vocab, u32 blank_index, f64 frame_duration_s,
//   frames * vocab f32 log-probabilities, row by row.
std::string encode_logprobs_binary(const LogProbMatrix& lp);
LogProbMatrix decode_logprobs_binary(std::string_view bytes);

// {"blank_index": b, "frame_duration_s": d, "log_probs": [[...], ...]}
std::string encode_logprobs_json(const LogProbMatrix& lp);
LogProbMatrix decode_logprobs_json(std::string_view text);

struct LogProbLoadOptions {
  bool check_normalization = true;
  double tolerance = 1e-3;
};

/// `.json` files use the structured form, anything else the binary form.
LogProbMatrix load_logprobs_file(const std::string& path, const LogProbLoadOptions& options = {});

// {"target": [...], "words": [{"text", "begin", "end"}], "segment_breaks": [...],
//  "task": "asr" | "ast"}; only "target" is required.
AlignRequest parse_align_request(std::string_view text);

}  // namespace asrkit
