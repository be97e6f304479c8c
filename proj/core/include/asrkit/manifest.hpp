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
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asrkit/language.hpp"

namespace asrkit {

/// One audio/text pair from a line-delimited manifest.
///
/// An empty `text` marks a non-speech entry (noise or music paired with an
/// empty target); such entries may carry any (source, target) pair.
struct ManifestEntry {
  std::string audio_id;
  double duration_s = 0.0;
  std::string source_lang;
  std::string target_lang;
  std::string corpus_id;
  std::string text;
  std::optional<std::int64_t> token_count;

  bool is_non_speech() const { return text.empty(); }
  LanguageKey language_key() const { return LanguageKey::from_pair(source_lang, target_lang); }

  bool operator==(const ManifestEntry&) const = default;
};

struct LoadOptions {
  LanguageSet languages = LanguageSet::european25();
};

/// Reads one JSON object per line. Blank lines are skipped; unknown fields
/// are ignored. Errors name the 1-based line number and the offending field.
std::vector<ManifestEntry> load_manifest(std::istream& in, const LoadOptions& options = {});
std::vector<ManifestEntry> load_manifest_file(const std::string& path,
                                              const LoadOptions& options = {});

/// Canonical single-line serialization (keys sorted, no trailing newline).
std::string to_manifest_line(const ManifestEntry& entry);
void write_manifest(std::ostream& out, const std::vector<ManifestEntry>& entries);

/// Mean and population standard deviation of per-language compression
/// rates (characters per token).
struct CompressionStats {
  double mean = 0.0;
  double stddev = 0.0;
};

CompressionStats compression_stats(const std::map<std::string, double>& rates);

}  // namespace asrkit
