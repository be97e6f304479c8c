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

#include "asrkit/inventory.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "asrkit/error.hpp"
#include "asrkit/text_format.hpp"
#include "json.hpp"

namespace asrkit {

using nlohmann::json;

void DataInventory::add_hours(const LanguageKey& key, const std::string& corpus, double hours) {
  if (!std::isfinite(hours) || hours < 0.0) {
    throw ValidationError("hours for " + key.str() + "/" + corpus + " must be nonnegative");
  }
  if (corpus.empty()) throw ValidationError("empty corpus id for " + key.str());
  if (hours == 0.0) return;
  hours_[key][corpus] += hours;
}

const CorpusHours& DataInventory::corpora(const LanguageKey& key) const {
  auto it = hours_.find(key);
  if (it == hours_.end()) throw ValidationError("unknown language key '" + key.str() + "'");
  return it->second;
}

std::vector<LanguageKey> DataInventory::keys() const {
  std::vector<LanguageKey> out;
  out.reserve(hours_.size());
  for (const auto& [key, _] : hours_) out.push_back(key);
  return out;
}

double DataInventory::language_hours(const LanguageKey& key) const {
  double sum = 0.0;
  for (const auto& [_, h] : corpora(key)) sum += h;
  return sum;
}

double DataInventory::total_hours() const {
  double sum = 0.0;
  for (const auto& [key, _] : hours_) sum += language_hours(key);
  return sum;
}

DataInventory DataInventory::subset(const std::vector<LanguageKey>& keys) const {
  DataInventory out;
  for (const auto& key : keys) out.hours_[key] = corpora(key);
  return out;
}

DataInventory DataInventory::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw ValidationError("scale factor must be positive");
  }
  DataInventory out = *this;
  for (auto& [_, corpora] : out.hours_) {
    for (auto& [_c, h] : corpora) h *= factor;
  }
  return out;
}

DataInventory build_inventory(const std::vector<ManifestEntry>& entries,
                              const InventoryOptions& options) {
  // Durations are summed in sorted order per bucket so the result is
  // bit-identical under any permutation of the input.
  std::map<LanguageKey, std::map<std::string, std::vector<double>>> durations;
  for (const auto& entry : entries) {
    if (entry.is_non_speech() && !options.include_non_speech) continue;
    durations[entry.language_key()][entry.corpus_id].push_back(entry.duration_s);
  }
  DataInventory inventory;
  for (auto& [key, corpora] : durations) {
    for (auto& [corpus, seconds] : corpora) {
      std::sort(seconds.begin(), seconds.end());
      double total = 0.0;
      for (double s : seconds) total += s;
      inventory.add_hours(key, corpus, total / 3600.0);
    }
  }
  return inventory;
}

std::string inventory_to_json(const DataInventory& inventory) {
  json languages = json::object();
  for (const auto& [key, corpora] : inventory.table()) {
    json c = json::object();
    for (const auto& [corpus, hours] : corpora) c[corpus] = hours;
    languages[key.str()] = {{"corpora", c}, {"total_hours", inventory.language_hours(key)}};
  }
  json report = {{"languages", languages}, {"total_hours", inventory.total_hours()}};
  return report.dump(2) + "\n";
}

std::string inventory_to_csv(const DataInventory& inventory) {
  std::ostringstream out;
  out << "language_key,corpus_id,hours\n";
  for (const auto& [key, corpora] : inventory.table()) {
    for (const auto& [corpus, hours] : corpora) {
      out << key.str() << ',' << corpus << ',' << format_double(hours) << '\n';
    }
  }
  return out.str();
}

DataInventory parse_inventory_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("inventory: malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("languages") || !doc["languages"].is_object()) {
    throw ValidationError("inventory: expected an object with a 'languages' field");
  }
  DataInventory inventory;
  for (const auto& [key_text, entry] : doc["languages"].items()) {
    const LanguageKey key = LanguageKey::parse(key_text);
    if (!entry.is_object() || !entry.contains("corpora") || !entry["corpora"].is_object()) {
      throw ValidationError("inventory: language '" + key_text + "' has no 'corpora' object");
    }
    for (const auto& [corpus, hours] : entry["corpora"].items()) {
      if (!hours.is_number()) {
        throw ValidationError("inventory: hours for " + key_text + "/" + corpus +
                              " must be a number");
      }
      inventory.add_hours(key, corpus, hours.get<double>());
    }
  }
  return inventory;
}

DataInventory parse_inventory_csv(std::string_view text) {
  DataInventory inventory;
  const auto lines = split(text, '\n');
  bool header_seen = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string line = trim(lines[i]);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != "language_key,corpus_id,hours") {
        throw ValidationError("inventory CSV: expected header 'language_key,corpus_id,hours'");
      }
      header_seen = true;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 3) {
      throw ValidationError("inventory CSV line " + std::to_string(i + 1) +
                            ": expected 3 fields");
    }
    double hours = 0.0;
    try {
      std::size_t used = 0;
      hours = std::stod(fields[2], &used);
      if (used != fields[2].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ValidationError("inventory CSV line " + std::to_string(i + 1) +
                            ": bad hours '" + fields[2] + "'");
    }
    inventory.add_hours(LanguageKey::parse(fields[0]), fields[1], hours);
  }
  return inventory;
}

DataInventory load_inventory_file(const std::string& path) {
  const std::string text = read_file(path);
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
    return parse_inventory_csv(text);
  }
  return parse_inventory_json(text);
}

}  // namespace asrkit
