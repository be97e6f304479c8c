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

#include "asrkit/manifest.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "asrkit/error.hpp"
#include "json.hpp"

namespace asrkit {
namespace {

using nlohmann::json;

[[noreturn]] void fail(std::size_t line, const std::string& field, const std::string& what) {
  throw ValidationError("manifest line " + std::to_string(line) + ", field '" + field +
                        "': " + what);
}

const json& require(const json& record, std::size_t line, const char* field) {
  auto it = record.find(field);
  if (it == record.end()) fail(line, field, "missing");
  return *it;
}

std::string require_string(const json& record, std::size_t line, const char* field) {
  const json& value = require(record, line, field);
  if (!value.is_string()) fail(line, field, "expected a string");
  return value.get<std::string>();
}

std::string require_language(const json& record, std::size_t line, const char* field,
                             const LanguageSet& languages) {
  std::string code = require_string(record, line, field);
  if (!languages.contains(code)) fail(line, field, "unknown language code '" + code + "'");
  return code;
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

std::vector<ManifestEntry> load_manifest(std::istream& in, const LoadOptions& options) {
  std::vector<ManifestEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;

    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      fail(line_no, "<record>", std::string("malformed JSON: ") + e.what());
    }
    if (!record.is_object()) fail(line_no, "<record>", "expected a JSON object");

    ManifestEntry entry;
    entry.audio_id = require_string(record, line_no, "audio_id");

    const json& duration = require(record, line_no, "duration_s");
    if (!duration.is_number()) fail(line_no, "duration_s", "expected a number");
    entry.duration_s = duration.get<double>();
    if (!std::isfinite(entry.duration_s) || entry.duration_s <= 0.0) {
      fail(line_no, "duration_s", "must be positive");
    }

    entry.source_lang = require_language(record, line_no, "source_lang", options.languages);
    entry.target_lang = require_language(record, line_no, "target_lang", options.languages);
    entry.corpus_id = require_string(record, line_no, "corpus_id");
    if (entry.corpus_id.empty()) fail(line_no, "corpus_id", "must not be empty");
    entry.text = require_string(record, line_no, "text");

    if (auto it = record.find("token_count"); it != record.end() && !it->is_null()) {
      if (!it->is_number_integer() || it->get<std::int64_t>() < 0) {
        fail(line_no, "token_count", "expected a nonnegative integer");
      }
      entry.token_count = it->get<std::int64_t>();
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<ManifestEntry> load_manifest_file(const std::string& path,
                                              const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open manifest '" + path + "'");
  return load_manifest(in, options);
}

std::string to_manifest_line(const ManifestEntry& entry) {
  json record = {
      {"audio_id", entry.audio_id},       {"duration_s", entry.duration_s},
      {"source_lang", entry.source_lang}, {"target_lang", entry.target_lang},
      {"corpus_id", entry.corpus_id},     {"text", entry.text},
  };
  if (entry.token_count) record["token_count"] = *entry.token_count;
  return record.dump();
}

void write_manifest(std::ostream& out, const std::vector<ManifestEntry>& entries) {
  for (const auto& entry : entries) out << to_manifest_line(entry) << '\n';
}

CompressionStats compression_stats(const std::map<std::string, double>& rates) {
  if (rates.empty()) throw ValidationError("compression_stats: no rates given");
  double sum = 0.0;
  for (const auto& [lang, rate] : rates) {
    if (!(rate > 0.0) || !std::isfinite(rate)) {
      throw ValidationError("compression_stats: rate for '" + lang + "' must be positive");
    }
    sum += rate;
  }
  const double n = static_cast<double>(rates.size());
  const double mean = sum / n;
  double sq = 0.0;
  for (const auto& [lang, rate] : rates) sq += (rate - mean) * (rate - mean);
  return {mean, std::sqrt(sq / n)};
}

}  // namespace asrkit
