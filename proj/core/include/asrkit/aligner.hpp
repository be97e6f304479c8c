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
#include <string_view>
#include <vector>

namespace asrkit {

/// Frame-by-vocabulary grid of CTC log-probabilities, stored row-major.
class LogProbMatrix {
 public:
  static constexpr double kDefaultFrameDuration = 0.08;

  /// Throws ValidationError on shape mismatch, zero frames/vocab, a blank
  /// index outside the vocabulary, a non-positive frame duration, or any
  /// non-finite entry.
  LogProbMatrix(std::size_t frames, std::size_t vocab, std::vector<double> values,
                std::size_t blank, double frame_duration_s = kDefaultFrameDuration);

  std::size_t frames() const { return frames_; }
  std::size_t vocab() const { return vocab_; }
  std::size_t blank() const { return blank_; }
  double frame_duration_s() const { return frame_duration_s_; }

  double at(std::size_t t, std::size_t v) const { return values_[t * vocab_ + v]; }
  std::span<const double> row(std::size_t t) const {
    return std::span<const double>(values_).subspan(t * vocab_, vocab_);
  }
  const std::vector<double>& values() const { return values_; }

  /// Throws ValidationError if some row's logsumexp differs from 0 by more
  /// than `tolerance`.
  void check_normalized(double tolerance = 1e-3) const;

  LogProbMatrix shifted(double offset) const;

 private:
  std::size_t frames_;
  std::size_t vocab_;
  std::vector<double> values_;
  std::size_t blank_;
  double frame_duration_s_;
};

struct TokenSpan {
  std::int64_t token_id = 0;
  std::size_t start_frame = 0;
  std::size_t end_frame = 0;  // inclusive
  double start_s = 0.0;       // start_frame * frame duration
  double end_s = 0.0;         // (end_frame + 1) * frame duration

  bool operator==(const TokenSpan&) const = default;
};

struct WordSpan {
  std::string text;
  std::size_t token_begin = 0;
  std::size_t token_end = 0;  // exclusive
  double start_s = 0.0;
  double end_s = 0.0;

  bool operator==(const WordSpan&) const = default;
};

struct SegmentSpan {
  std::string text;
  std::size_t word_begin = 0;
  std::size_t word_end = 0;  // exclusive
  double start_s = 0.0;
  double end_s = 0.0;

  bool operator==(const SegmentSpan&) const = default;
};

enum class AlignTask { kAsr, kAst };

AlignTask parse_align_task(std::string_view name);
std::string_view to_string(AlignTask task);

struct AlignmentResult {
  std::vector<TokenSpan> tokens;
  std::vector<WordSpan> words;
  std::vector<SegmentSpan> segments;
  double path_logprob = 0.0;
  /// Extended-sequence position (0 = leading blank, 2k+1 = k-th token)
  /// occupied by each frame on the best path.
  std::vector<std::size_t> state_path;
  AlignTask task = AlignTask::kAsr;
  /// Set for translation outputs: the acoustic model only knows the source
  /// language, so timings are approximate.
  bool heuristic = false;

  bool operator==(const AlignmentResult&) const = default;
};

/// Viterbi forced alignment of `target` against `lp`.
///
/// Works on the blank-interleaved sequence (blank, y1, blank, ..., yU, blank)
/// with the usual CTC moves: stay, advance by one, or skip a blank between
/// two different labels. Among equally scored best paths the one whose
/// state sequence, read from the last frame backwards, is lexicographically
/// smallest is returned; locally this means backtracking prefers the
/// predecessor that advanced the furthest, and a final-frame tie goes to the
/// last token rather than the trailing blank.
///
/// Throws InfeasibleError when U + (adjacent repeats) > T, ValidationError
/// when the target contains the blank or an out-of-vocabulary id.
AlignmentResult ctc_align(const LogProbMatrix& lp, std::span<const std::int64_t> target);

/// Half-open token index range [begin, end) forming one word.
struct WordRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string text;
};

/// Ranges must be non-empty and tile [0, tokens.size()) in order.
std::vector<WordSpan> aggregate_words(std::span<const TokenSpan> tokens,
                                      std::span<const WordRange> ranges);

/// `breaks` are strictly ascending word indices in [1, words.size()) at
/// which a new segment starts. Segment text joins word texts with a space.
std::vector<SegmentSpan> aggregate_segments(std::span<const WordSpan> words,
                                            std::span<const std::size_t> breaks);

struct AlignRequest {
  std::vector<std::int64_t> target;
  std::vector<WordRange> words;
  std::vector<std::size_t> segment_breaks;
  AlignTask task = AlignTask::kAsr;
};

/// ctc_align() followed by word/segment aggregation. Translation requests
/// keep only segment timestamps and are flagged heuristic.
AlignmentResult align_request(const LogProbMatrix& lp, const AlignRequest& request);

struct BatchItem {
  LogProbMatrix lp;
  AlignRequest request;
};

enum class AlignErrorKind { kNone, kValidation, kInfeasible };

struct BatchOutcome {
  std::optional<AlignmentResult> result;
  AlignErrorKind error_kind = AlignErrorKind::kNone;
  std::string error;  // prefixed with the item index
};

/// Aligns every item; failures are reported per item without affecting the
/// others. Output order and values match a serial run for any `threads`
/// (0 picks the hardware concurrency).
std::vector<BatchOutcome> align_batch(std::span<const BatchItem> items, std::size_t threads = 1);

/// {"task", "heuristic", "path_logprob", "tokens"?, "words"?, "segments"}.
/// Token and word levels are omitted for translation results.
std::string alignment_to_json(const AlignmentResult& result);

}  // namespace asrkit
