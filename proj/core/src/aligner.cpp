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

#include "asrkit/aligner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "asrkit/error.hpp"
#include "asrkit/text_format.hpp"
#include "json.hpp"

namespace asrkit {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_sum_exp(std::span<const double> row) {
  const double peak = *std::max_element(row.begin(), row.end());
  double acc = 0.0;
  for (double v : row) acc += std::exp(v - peak);
  return peak + std::log(acc);
}

}  // namespace

LogProbMatrix::LogProbMatrix(std::size_t frames, std::size_t vocab, std::vector<double> values,
                             std::size_t blank, double frame_duration_s)
    : frames_(frames),
      vocab_(vocab),
      values_(std::move(values)),
      blank_(blank),
      frame_duration_s_(frame_duration_s) {
  if (frames_ == 0 || vocab_ == 0) throw ValidationError("log-prob matrix: empty shape");
  if (values_.size() != frames_ * vocab_) {
    throw ValidationError("log-prob matrix: expected " + std::to_string(frames_ * vocab_) +
                          " values, got " + std::to_string(values_.size()));
  }
  if (blank_ >= vocab_) throw ValidationError("log-prob matrix: blank index out of range");
  if (!(frame_duration_s_ > 0.0) || !std::isfinite(frame_duration_s_)) {
    throw ValidationError("log-prob matrix: frame duration must be positive");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw ValidationError("log-prob matrix: non-finite value at frame " +
                            std::to_string(i / vocab_) + ", index " +
                            std::to_string(i % vocab_));
    }
  }
}

void LogProbMatrix::check_normalized(double tolerance) const {
  for (std::size_t t = 0; t < frames_; ++t) {
    const double lse = log_sum_exp(row(t));
    if (std::abs(lse) > tolerance) {
      throw ValidationError("log-prob matrix: row " + std::to_string(t) +
                            " is not a log-distribution (logsumexp " + format_double(lse) +
                            ")");
    }
  }
}

LogProbMatrix LogProbMatrix::shifted(double offset) const {
  std::vector<double> values = values_;
  for (double& v : values) v += offset;
  return LogProbMatrix(frames_, vocab_, std::move(values), blank_, frame_duration_s_);
}

AlignTask parse_align_task(std::string_view name) {
  if (name == "asr") return AlignTask::kAsr;
  if (name == "ast") return AlignTask::kAst;
  throw ValidationError("unknown task '" + std::string(name) + "' (expected asr or ast)");
}

std::string_view to_string(AlignTask task) { return task == AlignTask::kAsr ? "asr" : "ast"; }

AlignmentResult ctc_align(const LogProbMatrix& lp, std::span<const std::int64_t> target) {
  const std::size_t frames = lp.frames();
  const std::size_t labels = target.size();

  std::size_t repeats = 0;
  for (std::size_t i = 0; i < labels; ++i) {
    const std::int64_t id = target[i];
    if (id < 0 || static_cast<std::size_t>(id) >= lp.vocab()) {
      throw ValidationError("ctc_align: token id " + std::to_string(id) + " at position " +
                            std::to_string(i) + " is outside the vocabulary");
    }
    if (static_cast<std::size_t>(id) == lp.blank()) {
      throw ValidationError("ctc_align: target position " + std::to_string(i) +
                            " is the blank index");
    }
    if (i > 0 && target[i] == target[i - 1]) ++repeats;
  }
  if (labels + repeats > frames) {
    throw InfeasibleError("ctc_align: target of U=" + std::to_string(labels) + " tokens (" +
                          std::to_string(repeats) + " adjacent repeats) needs at least " +
                          std::to_string(labels + repeats) + " frames, but T=" +
                          std::to_string(frames));
  }

  const std::size_t states = 2 * labels + 1;
  auto emission = [&](std::size_t s) {
    return s % 2 == 0 ? lp.blank() : static_cast<std::size_t>(target[s / 2]);
  };

  // score[t * states + s]: best log-prob of a prefix ending in state s at t.
  // jump: how far the path advanced into s at t (0 stay, 1 next, 2 skip).
  std::vector<double> score(frames * states, kNegInf);
  std::vector<std::uint8_t> jump(frames * states, 0);

  score[0] = lp.at(0, lp.blank());
  if (labels > 0) score[1] = lp.at(0, emission(1));

  for (std::size_t t = 1; t < frames; ++t) {
    const double* prev = &score[(t - 1) * states];
    double* cur = &score[t * states];
    std::uint8_t* back = &jump[t * states];
    for (std::size_t s = 0; s < states; ++s) {
      double best = kNegInf;
      std::uint8_t how = 0;
      // Checked from the largest advance down with a strict comparison, so
      // exact ties keep the larger advance.
      if (s % 2 == 1 && s >= 3 && target[s / 2] != target[s / 2 - 1] && prev[s - 2] > best) {
        best = prev[s - 2];
        how = 2;
      }
      if (s >= 1 && prev[s - 1] > best) {
        best = prev[s - 1];
        how = 1;
      }
      if (prev[s] > best) {
        best = prev[s];
        how = 0;
      }
      if (best == kNegInf) continue;
      cur[s] = best + lp.at(t, emission(s));
      back[s] = how;
    }
  }

  const double* last = &score[(frames - 1) * states];
  std::size_t state = states - 1;
  if (labels > 0 && last[states - 2] >= last[states - 1]) state = states - 2;

  AlignmentResult result;
  result.path_logprob = last[state];
  result.state_path.assign(frames, 0);
  for (std::size_t t = frames; t-- > 0;) {
    result.state_path[t] = state;
    if (t > 0) state -= jump[t * states + state];
  }

  const double dt = lp.frame_duration_s();
  for (std::size_t t = 0; t < frames; ++t) {
    const std::size_t s = result.state_path[t];
    if (s % 2 == 0) continue;
    const std::size_t k = s / 2;
    if (result.tokens.size() == k) {
      result.tokens.push_back({target[k], t, t, static_cast<double>(t) * dt, 0.0});
    }
    result.tokens[k].end_frame = t;
  }
  for (auto& token : result.tokens) {
    token.end_s = static_cast<double>(token.end_frame + 1) * dt;
  }
  return result;
}

std::vector<WordSpan> aggregate_words(std::span<const TokenSpan> tokens,
                                      std::span<const WordRange> ranges) {
  std::vector<WordSpan> words;
  std::size_t expected = 0;
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    const WordRange& r = ranges[i];
    if (r.begin != expected || r.end <= r.begin || r.end > tokens.size()) {
      throw ValidationError("aggregate_words: word " + std::to_string(i) + " range [" +
                            std::to_string(r.begin) + ", " + std::to_string(r.end) +
                            ") leaves a gap, overlaps, or exceeds " +
                            std::to_string(tokens.size()) + " tokens");
    }
    words.push_back({r.text, r.begin, r.end, tokens[r.begin].start_s, tokens[r.end - 1].end_s});
    expected = r.end;
  }
  if (expected != tokens.size()) {
    throw ValidationError("aggregate_words: ranges cover " + std::to_string(expected) + " of " +
                          std::to_string(tokens.size()) + " tokens");
  }
  return words;
}

std::vector<SegmentSpan> aggregate_segments(std::span<const WordSpan> words,
                                            std::span<const std::size_t> breaks) {
  std::vector<SegmentSpan> segments;
  if (words.empty()) {
    if (!breaks.empty()) throw ValidationError("aggregate_segments: breaks without words");
    return segments;
  }
  std::size_t begin = 0;
  auto close = [&](std::size_t end) {
    SegmentSpan seg{{}, begin, end, words[begin].start_s, words[end - 1].end_s};
    for (std::size_t w = begin; w < end; ++w) {
      if (w > begin) seg.text += ' ';
      seg.text += words[w].text;
    }
    segments.push_back(std::move(seg));
    begin = end;
  };
  for (std::size_t b : breaks) {
    if (b <= begin || b >= words.size()) {
      throw ValidationError("aggregate_segments: break " + std::to_string(b) +
                            " is out of range or not ascending");
    }
    close(b);
  }
  close(words.size());
  return segments;
}

AlignmentResult align_request(const LogProbMatrix& lp, const AlignRequest& request) {
  AlignmentResult result = ctc_align(lp, request.target);
  result.task = request.task;
  if (!request.words.empty() || !request.segment_breaks.empty()) {
    result.words = aggregate_words(result.tokens, request.words);
    result.segments = aggregate_segments(result.words, request.segment_breaks);
  }
  if (request.task == AlignTask::kAst) {
    result.heuristic = true;
    result.words.clear();
    result.tokens.clear();
  }
  return result;
}

std::vector<BatchOutcome> align_batch(std::span<const BatchItem> items, std::size_t threads) {
  std::vector<BatchOutcome> outcomes(items.size());
  auto run_one = [&](std::size_t i) {
    BatchOutcome& out = outcomes[i];
    try {
      out.result = align_request(items[i].lp, items[i].request);
    } catch (const InfeasibleError& e) {
      out.error_kind = AlignErrorKind::kInfeasible;
      out.error = "item " + std::to_string(i) + ": " + e.what();
    } catch (const ValidationError& e) {
      out.error_kind = AlignErrorKind::kValidation;
      out.error = "item " + std::to_string(i) + ": " + e.what();
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, items.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) run_one(i);
    return outcomes;
  }

  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < threads; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < items.size(); i = next++) run_one(i);
      });
    }
  }
  return outcomes;
}

std::string alignment_to_json(const AlignmentResult& result) {
  using nlohmann::json;
  json doc = {{"task", std::string(to_string(result.task))},
              {"heuristic", result.heuristic},
              {"path_logprob", result.path_logprob}};
  if (result.task == AlignTask::kAsr) {
    json tokens = json::array();
    for (const auto& t : result.tokens) {
      tokens.push_back({{"id", t.token_id},
                        {"start_frame", t.start_frame},
                        {"end_frame", t.end_frame},
                        {"start", t.start_s},
                        {"end", t.end_s}});
    }
    json words = json::array();
    for (const auto& w : result.words) {
      words.push_back({{"text", w.text}, {"start", w.start_s}, {"end", w.end_s}});
    }
    doc["tokens"] = tokens;
    doc["words"] = words;
  }
  json segments = json::array();
  for (const auto& s : result.segments) {
    segments.push_back({{"text", s.text}, {"start", s.start_s}, {"end", s.end_s}});
  }
  doc["segments"] = segments;
  return doc.dump(2) + "\n";
}

}  // namespace asrkit
