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
#include <sstream>

#include "asrkit/error.hpp"
#include "asrkit/fixtures.hpp"
#include "asrkit/inventory.hpp"
#include "asrkit/manifest.hpp"

namespace asrkit {
namespace {

std::vector<ManifestEntry> parse(const std::string& text) {
  std::istringstream in(text);
  return load_manifest(in);
}

TEST(LanguageKey, AsrAndTranslationForms) {
  EXPECT_EQ(LanguageKey::from_pair("de", "de").str(), "de");
  EXPECT_TRUE(LanguageKey::from_pair("de", "de").is_asr());
  const auto x_en = LanguageKey::from_pair("lv", "en");
  EXPECT_EQ(x_en.str(), "lv-en");
  EXPECT_EQ(x_en.source(), "lv");
  EXPECT_EQ(x_en.target(), "en");
  EXPECT_EQ(LanguageKey::parse("en-lv").target(), "lv");
  EXPECT_THROW(LanguageKey::parse("EN"), ValidationError);
  EXPECT_THROW(LanguageKey::parse("de-"), ValidationError);
}

TEST(Manifest, EmptyStreamYieldsNothing) { EXPECT_TRUE(parse("").empty()); }

TEST(Manifest, SingleAsrLine) {
  const auto entries = parse(
      R"({"audio_id":"a1","duration_s":2.5,"source_lang":"de","target_lang":"de","corpus_id":"granary","text":"hallo"})"
      "\n");
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].language_key().str(), "de");
  EXPECT_DOUBLE_EQ(entries[0].duration_s, 2.5);
  EXPECT_FALSE(entries[0].token_count.has_value());
}

TEST(Manifest, MissingDurationNamesLineAndField) {
  try {
    parse(R"({"audio_id":"a1","source_lang":"de","target_lang":"de","corpus_id":"c","text":"x"})");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("line 1"), std::string::npos) << msg;
    EXPECT_NE(msg.find("duration_s"), std::string::npos) << msg;
  }
}

TEST(Manifest, RejectsBadValues) {
  EXPECT_THROW(parse(R"({"audio_id":"a","duration_s":0,"source_lang":"de","target_lang":"de","corpus_id":"c","text":""})"),
               ValidationError);
  EXPECT_THROW(parse(R"({"audio_id":"a","duration_s":1,"source_lang":"zz","target_lang":"zz","corpus_id":"c","text":""})"),
               ValidationError);
  EXPECT_THROW(parse("not json\n"), ValidationError);
}

TEST(Manifest, LineRoundTrip) {
  ManifestEntry e{"id-7", 3.25, "en", "lv", "nemo", "labdien", 12};
  const auto back = parse(to_manifest_line(e) + "\n");
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0], e);
}

TEST(Inventory, UnitConversionAndSummation) {
  std::vector<ManifestEntry> entries{{"a", 3600.0, "de", "de", "c", "x", {}}};
  const auto one = build_inventory(entries);
  EXPECT_DOUBLE_EQ(one.language_hours(LanguageKey::parse("de")), 1.0);

  DataInventory two;
  two.add_hours(LanguageKey::parse("fr"), "a", 900.0);
  two.add_hours(LanguageKey::parse("fr"), "b", 100.0);
  EXPECT_DOUBLE_EQ(two.language_hours(LanguageKey::parse("fr")), 1000.0);
}

TEST(Inventory, NonSpeechExcludedUnlessRequested) {
  std::vector<ManifestEntry> entries{{"a", 1800.0, "de", "de", "c", "", {}},
                                     {"b", 1800.0, "de", "de", "c", "x", {}}};
  EXPECT_DOUBLE_EQ(build_inventory(entries).total_hours(), 0.5);
  EXPECT_DOUBLE_EQ(build_inventory(entries, {true}).total_hours(), 1.0);
}

TEST(Inventory, PermutationInvariant) {
  std::vector<ManifestEntry> entries;
  for (int i = 0; i < 200; ++i) {
    entries.push_back({"a" + std::to_string(i), 0.1 + i * 1.37, i % 3 ? "de" : "en",
                       i % 3 ? "de" : "de", i % 2 ? "x" : "y", "t", {}});
  }
  const auto forward = build_inventory(entries);
  std::reverse(entries.begin(), entries.end());
  EXPECT_EQ(build_inventory(entries), forward);
}

TEST(Inventory, JsonAndCsvRoundTrip) {
  const auto inv = fixtures::european_training_hours();
  EXPECT_EQ(parse_inventory_json(inventory_to_json(inv)), inv);
  EXPECT_EQ(parse_inventory_csv(inventory_to_csv(inv)), inv);
}

TEST(Fixture, BulgarianTotal) {
  const auto inv = fixtures::european_training_hours();
  const auto& bg = inv.corpora(LanguageKey::parse("bg"));
  EXPECT_DOUBLE_EQ(bg.at("granary"), 13986.55);
  EXPECT_DOUBLE_EQ(bg.at("nemo"), 9.49);
  EXPECT_NEAR(inv.language_hours(LanguageKey::parse("bg")), 13996.04, 1e-9);
}

TEST(Fixture, ShapeAndPublishedTotal) {
  const auto inv = fixtures::european_training_hours();
  EXPECT_EQ(inv.size(), 73u);  // 25 ASR + 24 X->En + 24 En->X
  // Published grand total 1,701,282.75 h; per-row rounding accounts for the rest.
  EXPECT_NEAR(inv.total_hours(), 1701282.75, 0.05);
}

TEST(CompressionStats, Examples) {
  std::map<std::string, double> same;
  for (const auto& code : LanguageSet::european25().codes()) same[code] = 2.5;
  const auto flat = compression_stats(same);
  EXPECT_DOUBLE_EQ(flat.mean, 2.5);
  EXPECT_DOUBLE_EQ(flat.stddev, 0.0);

  const auto two = compression_stats({{"de", 2.0}, {"fr", 4.0}});
  EXPECT_DOUBLE_EQ(two.mean, 3.0);
  EXPECT_DOUBLE_EQ(two.stddev, 1.0);
  EXPECT_THROW(compression_stats({}), ValidationError);
}

}  // namespace
}  // namespace asrkit
