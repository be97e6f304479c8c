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

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <utility>

namespace asrkit {

/// A task direction treated as an independent sampling unit.
///
/// ASR directions are keyed by the bare language code ("de"); translation
/// directions join source and target with a single hyphen ("de-en",
/// "en-de"). Keys are always lowercase.
class LanguageKey {
 public:
  LanguageKey() = default;

  /// Parses and validates a canonical key. Throws ValidationError.
  static LanguageKey parse(std::string_view text);

  /// Key for a (source, target) pair; equal codes produce an ASR key.
  static LanguageKey from_pair(std::string_view source, std::string_view target);

  const std::string& str() const { return value_; }
  bool is_asr() const;
  std::string source() const;
  std::string target() const;

  auto operator<=>(const LanguageKey&) const = default;

 private:
  explicit LanguageKey(std::string value) : value_(std::move(value)) {}
  std::string value_;
};

/// Set of ISO-639-1 codes a manifest is allowed to reference.
class LanguageSet {
 public:
  LanguageSet() = default;
  explicit LanguageSet(std::set<std::string> codes) : codes_(std::move(codes)) {}

  /// The 25 European languages covered by the bundled fixture.
  static LanguageSet european25();

  bool contains(std::string_view code) const;
  const std::set<std::string>& codes() const& { return codes_; }
  std::set<std::string> codes() && { return std::move(codes_); }

 private:
  std::set<std::string> codes_;
};

bool is_language_code(std::string_view code);

}  // namespace asrkit
