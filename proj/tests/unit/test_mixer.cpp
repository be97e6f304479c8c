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

#include <algorithm>
#include <cmath>
#include <random>

#include "asrkit/error.hpp"
#include "asrkit/fixtures.hpp"
#include "asrkit/mixer.hpp"

namespace asrkit {
namespace {

const LanguageKey kX = LanguageKey::parse("de");
const LanguageKey kY = LanguageKey::parse("fr");

DataInventory two_corpora() {
  DataInventory inv;
  inv.add_hours(kX, "A", 900.0);
  inv.add_hours(kX, "B", 100.0);
  return inv;
}

TEST(CorpusWeights, SquareRootTempering) {
  // sqrt(0.9) / (sqrt(0.9) + sqrt(0.1)) = 3 / 4 exactly in real arithmetic.
  const double a = std::sqrt(0.9) / (std::sqrt(0.9) + std::sqrt(0.1));
  const auto p = corpus_weights(two_corpora(), kX, 0.5);
  EXPECT_NEAR(p.at("A"), 0.75, 1e-12);
  EXPECT_NEAR(p.at("B"), 0.25, 1e-12);
  EXPECT_NEAR(p.at("A"), a, 1e-15);
}

TEST(CorpusWeights, AlphaOneIsProportional) {
  const auto p = corpus_weights(two_corpora(), kX, 1.0);
  EXPECT_EQ(p.at("A"), 900.0 / 1000.0);
  EXPECT_EQ(p.at("B"), 100.0 / 1000.0);
}

TEST(CorpusWeights, SingleCorpus) {
  DataInventory inv;
  inv.add_hours(kX, "A", 12.0);
  EXPECT_EQ(corpus_weights(inv, kX, 0.3).at("A"), 1.0);
}

TEST(LanguageWeights, Examples) {
  DataInventory inv;
  inv.add_hours(kX, "A", 900.0);
  inv.add_hours(kY, "A", 100.0);
  const auto half = language_weights(inv, 0.5);
  EXPECT_NEAR(half.at(kX), 0.75, 1e-12);
  EXPECT_NEAR(half.at(kY), 0.25, 1e-12);
  const auto one = language_weights(inv, 1.0);
  EXPECT_EQ(one.at(kX), 0.9);
  EXPECT_EQ(one.at(kY), 0.1);

  DataInventory equal;
  for (const char* code : {"de", "fr", "it", "pl"}) equal.add_hours(LanguageKey::parse(code), "A", 7.0);
  for (const auto& [_, p] : language_weights(equal, 0.37)) EXPECT_NEAR(p, 0.25, 1e-15);
}

TEST(JointWeights, ProductOfIndependentFactors) {
  DataInventory inv = two_corpora();
  inv.add_hours(kY, "A", 1000.0 / 9.0);  // language shares 0.9 / 0.1 before tempering
  const auto w = joint_weights(inv, {0.5, 0.5});
  EXPECT_NEAR(w.language.at(kX), 0.75, 1e-12);
  EXPECT_NEAR(w.joint.at({kX, "A"}), 0.5625, 1e-12);
  EXPECT_EQ(w.joint.at({kX, "A"}), w.language.at(kX) * w.corpus.at(kX).at("A"));
}

TEST(JointWeights, SingleCell) {
  DataInventory inv;
  inv.add_hours(kX, "A", 3.0);
  EXPECT_EQ(joint_weights(inv, {}).joint.at({kX, "A"}), 1.0);
}

TEST(JointWeights, DefaultsAreHalf) {
  BalanceParams p;
  EXPECT_EQ(p.alpha, 0.5);
  EXPECT_EQ(p.beta, 0.5);
}

TEST(JointWeights, RejectsOutOfRangeExponents) {
  const auto inv = two_corpora();
  EXPECT_THROW(joint_weights(inv, {0.0, 0.5}), ValidationError);
  EXPECT_THROW(joint_weights(inv, {0.5, 1.5}), ValidationError);
  EXPECT_THROW(corpus_weights(inv, kY, 0.5), ValidationError);
}

TEST(JointWeights, FixtureGranaryDominatesBulgarian) {
  const auto w = joint_weights(fixtures::european_training_hours(), {});
  const auto bg = LanguageKey::parse("bg");
  EXPECT_GT(w.joint.at({bg, "granary"}), 30.0 * w.joint.at({bg, "nemo"}));
  double total = 0.0;
  for (const auto& [_, p] : w.joint) total += p;
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(JointWeights, FlatterExponentsRaiseSmallShares) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> hours(1.0, 1000.0);
  DataInventory inv;
  for (const char* code : {"de", "fr", "it", "pl", "lv"}) inv.add_hours(LanguageKey::parse(code), "A", hours(gen));
  const auto raw = language_weights(inv, 1.0);
  const auto flat = language_weights(inv, 0.2);
  const auto smallest = std::min_element(raw.begin(), raw.end(),
                                         [](auto& a, auto& b) { return a.second < b.second; });
  EXPECT_GT(flat.at(smallest->first), smallest->second);
}

TEST(Serialization, CsvHeaderAndRows) {
  const auto inv = two_corpora();
  const auto csv = mixture_to_csv(inv, joint_weights(inv, {}));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "language_key,corpus_id,hours,p_c,p_l,p_cl");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

}  // namespace
}  // namespace asrkit
