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

#include "asrkit/language.hpp"

#include <algorithm>

#include "asrkit/error.hpp"

namespace asrkit {

bool is_language_code(std::string_view code) {
  return code.size() == 2 &&
         std::all_of(code.begin(), code.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

LanguageKey LanguageKey::parse(std::string_view text) {
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) {
    if (!is_language_code(text)) {
      throw ValidationError("invalid language key '" + std::string(text) + "'");
    }
    return LanguageKey(std::string(text));
  }
  const auto source = text.substr(0, dash);
  const auto target = text.substr(dash + 1);
  if (!is_language_code(source) || !is_language_code(target) || source == target) {
    throw ValidationError("invalid language key '" + std::string(text) + "'");
  }
  return LanguageKey(std::string(text));
}

LanguageKey LanguageKey::from_pair(std::string_view source, std::string_view target) {
  if (!is_language_code(source) || !is_language_code(target)) {
    throw ValidationError("invalid language pair '" + std::string(source) + "', '" +
                          std::string(target) + "'");
  }
  if (source == target) return LanguageKey(std::string(source));
  return LanguageKey(std::string(source) + "-" + std::string(target));
}

bool LanguageKey::is_asr() const { return value_.find('-') == std::string::npos; }

std::string LanguageKey::source() const { return value_.substr(0, 2); }

std::string LanguageKey::target() const {
  return is_asr() ? value_ : value_.substr(value_.size() - 2);
}

LanguageSet LanguageSet::european25() {
  return LanguageSet({"bg", "cs", "da", "de", "el", "en", "es", "et", "fi",
                      "fr", "hr", "hu", "it", "lt", "lv", "mt", "nl", "pl",
                      "pt", "ro", "ru", "sk", "sl", "sv", "uk"});
}

bool LanguageSet::contains(std::string_view code) const {
  return codes_.find(std::string(code)) != codes_.end();
}

}  // namespace asrkit
