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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "asrkit/aligner.hpp"
#include "asrkit/error.hpp"
#include "asrkit/logprob_io.hpp"
#include "oracles.hpp"

namespace asrkit {
namespace {

LogProbMatrix from_probs(std::size_t frames, std::size_t vocab, std::vector<double> probs,
                         std::size_t blank = 0) {
  for (auto& p : probs) p = std::log(p);
  return LogProbMatrix(frames, vocab, std::move(probs), blank);
}

TEST(CtcAlign, EmptyTargetIsAllBlank) {
  const auto lp = from_probs(3, 2, {0.6, 0.4, 0.7, 0.3, 0.2, 0.8});
  const auto r = ctc_align(lp, std::vector<std::int64_t>{});
  EXPECT_TRUE(r.tokens.empty());
  EXPECT_EQ(r.path_logprob, lp.at(0, 0) + lp.at(1, 0) + lp.at(2, 0));
}

TEST(CtcAlign, TwoFrameExample) {
  const auto lp = from_probs(2, 2, {0.1, 0.9, 0.8, 0.2});
  const std::vector<std::int64_t> target{1};
  const auto r = ctc_align(lp, target);
  ASSERT_EQ(r.tokens.size(), 1u);
  EXPECT_EQ(r.tokens[0].start_frame, 0u);
  EXPECT_EQ(r.tokens[0].end_frame, 0u);
  EXPECT_DOUBLE_EQ(r.tokens[0].start_s, 0.0);
  EXPECT_DOUBLE_EQ(r.tokens[0].end_s, 0.08);
  EXPECT_EQ(r.path_logprob, std::log(0.9) + std::log(0.8));
  const auto best = oracle::brute_force_ctc(lp, target);
  EXPECT_EQ(r.path_logprob, best.logprob);
  EXPECT_EQ(r.state_path, best.states);
}

TEST(CtcAlign, RepeatedTokenNeedsSeparatingBlank) {
  std::mt19937_64 gen(5);
  const std::vector<std::int64_t> target{1, 1};
  for (int trial = 0; trial < 50; ++trial) {
    const auto lp = oracle::random_logprobs(gen, 4, 3, 0);
    const auto r = ctc_align(lp, target);
    ASSERT_EQ(r.tokens.size(), 2u);
    EXPECT_GE(r.tokens[1].start_frame, r.tokens[0].end_frame + 2);
    const auto best = oracle::brute_force_ctc(lp, target);
    EXPECT_NEAR(r.path_logprob, best.logprob, 1e-12);
    EXPECT_EQ(r.state_path, best.states);
  }
  const auto tight = oracle::random_logprobs(gen, 3, 3, 0);
  const auto r = ctc_align(tight, target);
  EXPECT_EQ(r.tokens[0].end_frame + 2, r.tokens[1].start_frame);  // exactly one blank frame
}

TEST(CtcAlign, UniformRowsUseTieBreak) {
  // Every valid path scores the same; the pinned rule picks one deterministically.
  std::vector<double> probs(6 * 3, 1.0 / 3.0);
  const auto lp = from_probs(6, 3, probs);
  const std::vector<std::int64_t> target{1, 2};
  const auto best = oracle::brute_force_ctc(lp, target);
  EXPECT_GT(best.valid_paths, 1u);
  EXPECT_EQ(ctc_align(lp, target).state_path, best.states);
}

TEST(CtcAlign, SpansAreOrderedAndInsideAudio) {
  std::mt19937_64 gen(8);
  const auto lp = oracle::random_logprobs(gen, 40, 6, 0, 0.04);
  const std::vector<std::int64_t> target{3, 1, 1, 5, 2, 4};
  const auto r = ctc_align(lp, target);
  ASSERT_EQ(r.tokens.size(), target.size());
  for (std::size_t k = 0; k < r.tokens.size(); ++k) {
    EXPECT_EQ(r.tokens[k].token_id, target[k]);
    EXPECT_LE(r.tokens[k].start_frame, r.tokens[k].end_frame);
    EXPECT_LE(r.tokens[k].end_s, 40 * 0.04 + 1e-12);
    if (k > 0) EXPECT_LT(r.tokens[k - 1].end_frame, r.tokens[k].start_frame);
  }
}

TEST(CtcAlign, ShiftingEveryEntryShiftsPathScore) {
  std::mt19937_64 gen(13);
  const auto lp = oracle::random_logprobs(gen, 12, 4, 0);
  const std::vector<std::int64_t> target{1, 2, 3};
  const auto a = ctc_align(lp, target);
  const auto b = ctc_align(lp.shifted(-0.5), target);
  EXPECT_EQ(a.state_path, b.state_path);
  EXPECT_NEAR(b.path_logprob, a.path_logprob - 0.5 * 12, 1e-9);
}

TEST(CtcAlign, InfeasibleAndInvalidTargets) {
  const auto lp = from_probs(2, 3, {0.2, 0.4, 0.4, 0.2, 0.4, 0.4});
  EXPECT_THROW(ctc_align(lp, std::vector<std::int64_t>{1, 1}), InfeasibleError);
  EXPECT_THROW(ctc_align(lp, std::vector<std::int64_t>{1, 2, 1}), InfeasibleError);
  EXPECT_THROW(ctc_align(lp, std::vector<std::int64_t>{0}), ValidationError);
  EXPECT_THROW(ctc_align(lp, std::vector<std::int64_t>{3}), ValidationError);
  EXPECT_NO_THROW(ctc_align(lp, std::vector<std::int64_t>{1, 2}));
}

TEST(LogProbMatrix, Validation) {
  EXPECT_THROW(LogProbMatrix(2, 2, {0.0, 0.0, 0.0}, 0), ValidationError);
  EXPECT_THROW(LogProbMatrix(1, 2, {0.0, 0.0}, 2), ValidationError);
  EXPECT_THROW(LogProbMatrix(1, 2, {0.0, NAN}, 0), ValidationError);
  EXPECT_THROW(from_probs(1, 2, {0.5, 0.2}).check_normalized(), ValidationError);
  EXPECT_NO_THROW(from_probs(1, 2, {0.5, 0.5}).check_normalized());
}

TEST(Words, Aggregation) {
  const std::vector<TokenSpan> tokens{{1, 0, 1, 0.0, 0.16}, {2, 3, 3, 0.24, 0.32}, {3, 5, 6, 0.4, 0.56}};
  const std::vector<WordRange> one{{0, 3, "all"}};
  const auto w1 = aggregate_words(tokens, one);
  ASSERT_EQ(w1.size(), 1u);
  EXPECT_EQ(w1[0].start_s, 0.0);
  EXPECT_EQ(w1[0].end_s, 0.56);

  const std::vector<WordRange> two{{0, 1, "a"}, {1, 3, "bc"}};
  const auto w2 = aggregate_words(tokens, two);
  ASSERT_EQ(w2.size(), 2u);
  EXPECT_EQ(w2[0].end_s, tokens[0].end_s);
  EXPECT_EQ(w2[1].start_s, tokens[1].start_s);
  EXPECT_EQ(w2[1].end_s, tokens[2].end_s);

  EXPECT_TRUE(aggregate_words({}, {}).empty());
  const std::vector<WordRange> gap{{0, 1, "a"}, {2, 3, "c"}};
  EXPECT_THROW(aggregate_words(tokens, gap), ValidationError);
}

TEST(Segments, Aggregation) {
  const std::vector<WordSpan> words{{"a", 0, 1, 0.0, 0.1}, {"b", 1, 2, 0.2, 0.3}, {"c", 2, 3, 0.4, 0.5}};
  const auto one = aggregate_segments(words, {});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].text, "a b c");
  EXPECT_EQ(one[0].start_s, 0.0);
  EXPECT_EQ(one[0].end_s, 0.5);

  const std::vector<std::size_t> every{1, 2};
  const auto each = aggregate_segments(words, every);
  ASSERT_EQ(each.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(each[i].text, words[i].text);
    EXPECT_EQ(each[i].start_s, words[i].start_s);
  }
  const std::vector<std::size_t> bad{2, 1};
  EXPECT_THROW(aggregate_segments(words, bad), ValidationError);
}

TEST(AlignRequest, TranslationKeepsOnlySegments) {
  std::mt19937_64 gen(21);
  const auto lp = oracle::random_logprobs(gen, 10, 4, 0);
  AlignRequest req{{1, 2, 3}, {{0, 2, "ab"}, {2, 3, "c"}}, {1}, AlignTask::kAst};
  const auto r = align_request(lp, req);
  EXPECT_TRUE(r.heuristic);
  EXPECT_TRUE(r.tokens.empty());
  EXPECT_TRUE(r.words.empty());
  EXPECT_EQ(r.segments.size(), 2u);

  req.task = AlignTask::kAsr;
  const auto asr = align_request(lp, req);
  EXPECT_FALSE(asr.heuristic);
  EXPECT_EQ(asr.words.size(), 2u);
  EXPECT_EQ(asr.segments[1].start_s, asr.words[1].start_s);
}

TEST(AlignBatch, ParallelMatchesSerial) {
  EXPECT_TRUE(align_batch({}, 4).empty());

  std::mt19937_64 gen(99);
  std::vector<BatchItem> items;
  for (int i = 0; i < 100; ++i) {
    const std::size_t frames = 5 + i % 20;
    AlignRequest req;
    for (std::size_t k = 0; k < 1 + static_cast<std::size_t>(i) % 4; ++k) {
      req.target.push_back(1 + static_cast<std::int64_t>((i + k) % 4));
    }
    items.push_back({oracle::random_logprobs(gen, frames, 5, 0), req});
  }
  items.push_back({oracle::random_logprobs(gen, 1, 5, 0), {{1, 2}, {}, {}, AlignTask::kAsr}});

  const auto serial = align_batch(items, 1);
  const auto parallel = align_batch(items, 8);
  ASSERT_EQ(serial.size(), items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    EXPECT_EQ(serial[i].result, parallel[i].result);
    EXPECT_EQ(serial[i].error, parallel[i].error);
  }
  EXPECT_EQ(serial.back().error_kind, AlignErrorKind::kInfeasible);
  EXPECT_EQ(serial.back().error.rfind("item 100:", 0), 0u);

  const std::span<const BatchItem> first(items.data(), 1);
  EXPECT_EQ(*align_batch(first)[0].result, align_request(items[0].lp, items[0].request));
}

TEST(LogProbIo, BinaryAndJsonRoundTrip) {
  std::mt19937_64 gen(1);
  const auto lp = oracle::random_logprobs(gen, 7, 5, 4, 0.02);
  const auto bin = decode_logprobs_binary(encode_logprobs_binary(lp));
  EXPECT_EQ(bin.frames(), 7u);
  EXPECT_EQ(bin.vocab(), 5u);
  EXPECT_EQ(bin.blank(), 4u);
  EXPECT_EQ(bin.frame_duration_s(), 0.02);
  for (std::size_t i = 0; i < lp.values().size(); ++i) {
    EXPECT_EQ(bin.values()[i], static_cast<double>(static_cast<float>(lp.values()[i])));
  }
  const auto js = decode_logprobs_json(encode_logprobs_json(lp));
  EXPECT_EQ(js.values(), lp.values());
  EXPECT_THROW(decode_logprobs_binary(encode_logprobs_binary(lp).substr(1)), ValidationError);
}

TEST(LogProbIo, RequestParsing) {
  const auto req = parse_align_request(
      R"({"target":[3,4],"words":[{"text":"hi","begin":0,"end":2}],"segment_breaks":[],"task":"ast"})");
  EXPECT_EQ(req.target, (std::vector<std::int64_t>{3, 4}));
  ASSERT_EQ(req.words.size(), 1u);
  EXPECT_EQ(req.words[0].text, "hi");
  EXPECT_EQ(req.task, AlignTask::kAst);
  EXPECT_THROW(parse_align_request(R"({"target":"x"})"), ValidationError);
}

}  // namespace
}  // namespace asrkit
