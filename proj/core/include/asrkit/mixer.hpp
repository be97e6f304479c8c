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
#include <map>
#include <string>

#include "asrkit/inventory.hpp"

namespace asrkit {

/// Exponents flattening hour-proportional shares toward uniform.
/// `alpha` acts on corpora within a language, `beta` on languages.
struct BalanceParams {
  double alpha = 0.5;
  double beta = 0.5;

  /// Throws ValidationError unless both lie in (0, 1].
  void validate() const;
};

/// One sampling unit: a corpus within a language direction.
struct EntryKey {
  LanguageKey language;
  std::string corpus;

  auto operator<=>(const EntryKey&) const = default;
};

using CorpusDistribution = std::map<std::string, double>;
using LanguageDistribution = std::map<LanguageKey, double>;
using JointDistribution = std::map<EntryKey, double>;

struct MixtureWeights {
  std::map<LanguageKey, CorpusDistribution> corpus;  // p_c, per language
  LanguageDistribution language;                     // p_l
  JointDistribution joint;                           // p_{c,l} = p_l * p_c
};

/// Corpus balancing within one language: p_c ∝ (n(c) / N_l)^alpha.
/// With alpha == 1 the raw shares n(c) / N_l are returned unchanged.
CorpusDistribution corpus_weights(const DataInventory& inventory, const LanguageKey& key,
                                  double alpha);

/// Language balancing across the pool: p_l ∝ (n(l) / N_total)^beta.
LanguageDistribution language_weights(const DataInventory& inventory, double beta);

/// Two-tier mixture: corpora are balanced inside each language first, then
/// languages are balanced on their totals, and the two are multiplied.
MixtureWeights joint_weights(const DataInventory& inventory, const BalanceParams& params);

/// The opposite tier order, kept for comparison: languages are balanced
/// inside each corpus first, then corpora are balanced on their totals
/// as if each corpus were a language.
JointDistribution corpus_first_joint_weights(const DataInventory& inventory,
                                             const BalanceParams& params);

/// CSV: language_key,corpus_id,hours,p_c,p_l,p_cl (one row per entry).
std::string mixture_to_csv(const DataInventory& inventory, const MixtureWeights& weights);
std::string mixture_to_json(const DataInventory& inventory, const MixtureWeights& weights,
                            const BalanceParams& params);

}  // namespace asrkit
