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

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "asrkit/aligner.hpp"
#include "asrkit/fixtures.hpp"
#include "asrkit/longform.hpp"
#include "asrkit/mixer.hpp"
#include "asrkit/posenc.hpp"
#include "asrkit/sampler.hpp"
#include "oracles.hpp"

namespace {

using namespace asrkit;

// Frames at 80 ms for 40 s of audio, 128-token vocabulary.
void BM_CtcAlign(benchmark::State& state) {
  std::mt19937_64 gen(1);
  const auto frames = static_cast<std::size_t>(state.range(0));
  const auto labels = static_cast<std::size_t>(state.range(1));
  const auto lp = oracle::random_logprobs(gen, frames, 128, 0);
  std::vector<std::int64_t> target(labels);
  for (auto& t : target) t = 1 + static_cast<std::int64_t>(gen() % 127);
  for (auto _ : state) benchmark::DoNotOptimize(ctc_align(lp, target));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(frames));
}
BENCHMARK(BM_CtcAlign)->Args({500, 50})->Args({500, 200})->Args({2000, 400});

void BM_AlignBatch(benchmark::State& state) {
  std::mt19937_64 gen(2);
  std::vector<BatchItem> items;
  for (int i = 0; i < 64; ++i) {
    AlignRequest req;
    for (int k = 0; k < 80; ++k) req.target.push_back(1 + static_cast<std::int64_t>(gen() % 63));
    items.push_back({oracle::random_logprobs(gen, 500, 64, 0), req});
  }
  const auto threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(align_batch(items, threads));
}
BENCHMARK(BM_AlignBatch)->Arg(1)->Arg(4)->UseRealTime();

void BM_JointWeightsFixture(benchmark::State& state) {
  const auto inv = fixtures::european_training_hours();
  for (auto _ : state) benchmark::DoNotOptimize(joint_weights(inv, {0.5, 0.5}));
}
BENCHMARK(BM_JointWeightsFixture);

void BM_SampleFixture(benchmark::State& state) {
  const MixtureSampler sampler(joint_weights(fixtures::european_training_hours(), {}).joint);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sampler.sample_indices(0, n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleFixture)->Arg(256 * 1000);

void BM_MergePair(benchmark::State& state) {
  std::mt19937_64 gen(3);
  std::vector<int> left(400), right(400);
  for (auto& t : left) t = static_cast<int>(gen() % 5000);
  for (auto& t : right) t = static_cast<int>(gen() % 5000);
  std::copy(left.end() - 8, left.end(), right.begin());
  const auto window = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(merge_pair(left, right, window));
}
BENCHMARK(BM_MergePair)->Arg(20)->Arg(100);

void BM_PlanChunks(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(plan_chunks(4 * 3600.0 + 17.3));
}
BENCHMARK(BM_PlanChunks);

void BM_AlibiGrid(benchmark::State& state) {
  const AlibiSpec spec{static_cast<std::size_t>(state.range(0)), 16, 1.0, {}};
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_alibi_bias(spec));
}
BENCHMARK(BM_AlibiGrid)->Arg(256)->Arg(1024);

}  // namespace
BENCHMARK_MAIN();
