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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "asrkit/language.hpp"
#include "asrkit/manifest.hpp"

namespace asrkit {

using CorpusHours = std::map<std::string, double>;

/// Training hours keyed by language direction and corpus.
///
/// Hours are strictly positive; zero-hour corpora are never stored. Totals
/// are derived on demand so they always agree with the per-corpus table.
class DataInventory {
 public:
  /// Adds hours to (key, corpus). Zero is a no-op; negative or non-finite
  /// hours throw ValidationError.
  void add_hours(const LanguageKey& key, const std::string& corpus, double hours);

  const std::map<LanguageKey, CorpusHours>& table() const { return hours_; }
  const CorpusHours& corpora(const LanguageKey& key) const;

  bool empty() const { return hours_.empty(); }
  std::size_t size() const { return hours_.size(); }
  bool contains(const LanguageKey& key) const { return hours_.count(key) != 0; }
  std::vector<LanguageKey> keys() const;

  /// n(l): total hours of one language direction.
  double language_hours(const LanguageKey& key) const;
  /// N_total: total hours over all directions.
  double total_hours() const;

  DataInventory subset(const std::vector<LanguageKey>& keys) const;
  DataInventory scaled(double factor) const;

  bool operator==(const DataInventory&) const = default;

 private:
  std::map<LanguageKey, CorpusHours> hours_;
};

struct InventoryOptions {
  bool include_non_speech = false;
};

/// Aggregates entry durations into hours per (language key, corpus).
/// The result does not depend on the order of `entries`.
DataInventory build_inventory(const std::vector<ManifestEntry>& entries,
                              const InventoryOptions& options = {});

/// JSON report: {"languages": {key: {"corpora": {...}, "total_hours": x}},
/// "total_hours": x}. Keys are emitted in sorted order.
std::string inventory_to_json(const DataInventory& inventory);
/// CSV with header `language_key,corpus_id,hours`.
std::string inventory_to_csv(const DataInventory& inventory);

DataInventory parse_inventory_json(std::string_view text);
DataInventory parse_inventory_csv(std::string_view text);
/// Dispatches on extension: `.csv` is CSV, anything else JSON.
DataInventory load_inventory_file(const std::string& path);

}  // namespace asrkit
