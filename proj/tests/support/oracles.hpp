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

// Slow, direct reference implementations used only by tests.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "asrkit/aligner.hpp"

namespace asrkit::oracle {

// Every valid CTC state path over the blank-interleaved target, scored by
// summing frame log-probs in time order. Best score wins; exact ties go to
// the path that is smallest when compared from the last frame backwards.
struct CtcBest {
  double logprob = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> states;
  std::size_t valid_paths = 0;
};

inline CtcBest brute_force_ctc(const LogProbMatrix& lp, const std::vector<std::int64_t>& target) {
  const std::size_t frames = lp.frames();
  const std::size_t n_states = 2 * target.size() + 1;
  auto label = [&](std::size_t s) {
    return s % 2 == 0 ? lp.blank() : static_cast<std::size_t>(target[s / 2]);
  };
  CtcBest best;
  std::vector<std::size_t> path(frames);

  auto consider = [&]() {
    double score = 0.0;
    for (std::size_t t = 0; t < frames; ++t) score += lp.at(t, label(path[t]));
    ++best.valid_paths;
    bool better = score > best.logprob;
    if (score == best.logprob) {
      better = std::lexicographical_compare(path.rbegin(), path.rend(), best.states.rbegin(),
                                            best.states.rend());
    }
    if (best.states.empty() || better) {
      best.logprob = score;
      best.states = path;
    }
  };

  auto step = [&](auto&& self, std::size_t t) -> void {
    if (t == frames) {
      const std::size_t last = path[frames - 1];
      if (last == n_states - 1 || (n_states > 1 && last == n_states - 2)) consider();
      return;
    }
    const std::size_t prev = path[t - 1];
    for (std::size_t next = prev; next <= prev + 2 && next < n_states; ++next) {
      if (next == prev + 2) {
        // Skipping a blank is only allowed between two different labels.
        if (next % 2 == 0 || target[next / 2] == target[next / 2 - 1]) continue;
      }
      path[t] = next;
      self(self, t + 1);
    }
  };

  for (std::size_t first = 0; first < std::min<std::size_t>(2, n_states); ++first) {
    path[0] = first;
    step(step, 1);
  }
  return best;
}

// Token spans read off a state path: first and last frame of each label state.
struct FrameSpan {
  std::size_t first;
  std::size_t last;
};

inline std::vector<FrameSpan> spans_of(const std::vector<std::size_t>& states, std::size_t labels) {
  std::vector<FrameSpan> out(labels, {std::numeric_limits<std::size_t>::max(), 0});
  for (std::size_t t = 0; t < states.size(); ++t) {
    if (states[t] % 2 == 0) continue;
    auto& span = out[states[t] / 2];
    span.first = std::min(span.first, t);
    span.last = std::max(span.last, t);
  }
  return out;
}

// Smallest x among the values with at least ceil(q * n) values <= x.
template <class T>
T brute_quantile(std::vector<T> values, double q) {
  std::sort(values.begin(), values.end());
  for (const T& x : values) {
    std::size_t at_most = 0;
    for (const T& y : values) at_most += y <= x ? 1 : 0;
    if (static_cast<double>(at_most) >= q * static_cast<double>(values.size())) return x;
  }
  return values.back();
}

// Minimum padding over every (length, count) pair on the tick grid.
inline double exhaustive_min_padding(double duration_s, int min_ticks, int max_ticks,
                                     int overlap_ticks, int tps) {
  double best = std::numeric_limits<double>::infinity();
  const int max_count = static_cast<int>(duration_s * tps) + 2;
  for (int len = min_ticks; len <= max_ticks; ++len) {
    for (int k = 1; k <= max_count; ++k) {
      const std::int64_t covered = static_cast<std::int64_t>(k) * (len - overlap_ticks) + overlap_ticks;
      const double covered_s = static_cast<double>(covered) / tps;
      if (covered_s < duration_s - 1e-9) continue;
      best = std::min(best, std::max(0.0, covered_s - duration_s));
      break;
    }
  }
  return best;
}

// Classic O(mn) LCS length.
template <class T>
std::size_t lcs_length(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = a[i - 1] == b[j - 1] ? d[i - 1][j - 1] + 1 : std::max(d[i - 1][j], d[i][j - 1]);
    }
  }
  return d[a.size()][b.size()];
}

// Linear-scan inverse CDF with its own RNG stream, independent of the library sampler.
inline std::vector<std::size_t> linear_scan_sample(const std::vector<double>& weights,
                                                   std::uint64_t seed, std::size_t n) {
  std::mt19937 gen(static_cast<std::uint32_t>(seed));
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<std::size_t> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = uniform(gen);
    double acc = 0.0;
    std::size_t pick = weights.size() - 1;
    for (std::size_t k = 0; k < weights.size(); ++k) {
      acc += weights[k];
      if (u < acc) {
        pick = k;
        break;
      }
    }
    out.push_back(pick);
  }
  return out;
}

// A log-prob matrix with random rows normalized by softmax.
inline LogProbMatrix random_logprobs(std::mt19937_64& gen, std::size_t frames, std::size_t vocab,
                                     std::size_t blank, double frame_duration = 0.08) {
  std::normal_distribution<double> logits(0.0, 2.0);
  std::vector<double> values(frames * vocab);
  for (std::size_t t = 0; t < frames; ++t) {
    double mx = -std::numeric_limits<double>::infinity();
    for (std::size_t v = 0; v < vocab; ++v) {
      values[t * vocab + v] = logits(gen);
      mx = std::max(mx, values[t * vocab + v]);
    }
    double sum = 0.0;
    for (std::size_t v = 0; v < vocab; ++v) sum += std::exp(values[t * vocab + v] - mx);
    const double lse = mx + std::log(sum);
    for (std::size_t v = 0; v < vocab; ++v) values[t * vocab + v] -= lse;
  }
  return LogProbMatrix(frames, vocab, std::move(values), blank, frame_duration);
}

}  // namespace asrkit::oracle
