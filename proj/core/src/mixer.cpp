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

#include "asrkit/mixer.hpp"

#include <cmath>
#include <sstream>

#include "asrkit/error.hpp"
#include "asrkit/text_format.hpp"
#include "json.hpp"

namespace asrkit {
namespace {

void check_exponent(double value, const char* name) {
  if (!(value > 0.0 && value <= 1.0)) {
    throw ValidationError(std::string(name) + " must lie in (0, 1], got " +
                          format_double(value));
  }
}

// share^exponent via exp(exponent * ln share); share > 0 is guaranteed by
// the inventory, which never stores zero hours.
double temper(double share, double exponent) { return std::exp(exponent * std::log(share)); }

// Turns a map of positive amounts into a tempered, normalized distribution.
template <class Key>
std::map<Key, double> tempered_distribution(const std::map<Key, double>& amounts,
                                            double exponent) {
  double total = 0.0;
  for (const auto& [_, a] : amounts) total += a;

  std::map<Key, double> out;
  if (exponent == 1.0) {
    for (const auto& [k, a] : amounts) out[k] = a / total;
    return out;
  }
  double norm = 0.0;
  for (const auto& [k, a] : amounts) {
    const double w = temper(a / total, exponent);
    out[k] = w;
    norm += w;
  }
  for (auto& [_, w] : out) w /= norm;
  return out;
}

}  // namespace

void BalanceParams::validate() const {
  check_exponent(alpha, "alpha");
  check_exponent(beta, "beta");
}

CorpusDistribution corpus_weights(const DataInventory& inventory, const LanguageKey& key,
                                  double alpha) {
  check_exponent(alpha, "alpha");
  return tempered_distribution(inventory.corpora(key), alpha);
}

LanguageDistribution language_weights(const DataInventory& inventory, double beta) {
  check_exponent(beta, "beta");
  if (inventory.empty()) throw ValidationError("language_weights: empty inventory");
  std::map<LanguageKey, double> totals;
  for (const auto& key : inventory.keys()) totals[key] = inventory.language_hours(key);
  return tempered_distribution(totals, beta);
}

MixtureWeights joint_weights(const DataInventory& inventory, const BalanceParams& params) {
  params.validate();
  MixtureWeights weights;
  weights.language = language_weights(inventory, params.beta);
  for (const auto& [key, p_l] : weights.language) {
    auto& p_c = weights.corpus[key] = corpus_weights(inventory, key, params.alpha);
    for (const auto& [corpus, p] : p_c) weights.joint[EntryKey{key, corpus}] = p_l * p;
  }
  return weights;
}

JointDistribution corpus_first_joint_weights(const DataInventory& inventory,
                                             const BalanceParams& params) {
  params.validate();
  if (inventory.empty()) throw ValidationError("corpus_first_joint_weights: empty inventory");

  std::map<std::string, std::map<LanguageKey, double>> by_corpus;
  for (const auto& [key, corpora] : inventory.table()) {
    for (const auto& [corpus, hours] : corpora) by_corpus[corpus][key] = hours;
  }
  std::map<std::string, double> corpus_totals;
  for (const auto& [corpus, langs] : by_corpus) {
    double total = 0.0;
    for (const auto& [_, h] : langs) total += h;
    corpus_totals[corpus] = total;
  }
  const auto p_corpus = tempered_distribution(corpus_totals, params.alpha);

  JointDistribution joint;
  for (const auto& [corpus, langs] : by_corpus) {
    const auto p_lang = tempered_distribution(langs, params.beta);
    for (const auto& [key, p] : p_lang) joint[EntryKey{key, corpus}] = p_corpus.at(corpus) * p;
  }
  return joint;
}

std::string mixture_to_csv(const DataInventory& inventory, const MixtureWeights& weights) {
  std::ostringstream out;
  out << "language_key,corpus_id,hours,p_c,p_l,p_cl\n";
  for (const auto& [entry, p_cl] : weights.joint) {
    out << entry.language.str() << ',' << entry.corpus << ','
        << format_double(inventory.corpora(entry.language).at(entry.corpus)) << ','
        << format_double(weights.corpus.at(entry.language).at(entry.corpus)) << ','
        << format_double(weights.language.at(entry.language)) << ',' << format_double(p_cl)
        << '\n';
  }
  return out.str();
}

std::string mixture_to_json(const DataInventory& inventory, const MixtureWeights& weights,
                            const BalanceParams& params) {
  using nlohmann::json;
  json languages = json::object();
  for (const auto& [key, p_l] : weights.language) {
    json corpora = json::object();
    for (const auto& [corpus, p_c] : weights.corpus.at(key)) {
      corpora[corpus] = {{"hours", inventory.corpora(key).at(corpus)},
                         {"p_c", p_c},
                         {"p_cl", weights.joint.at(EntryKey{key, corpus})}};
    }
    languages[key.str()] = {{"p_l", p_l}, {"corpora", corpora}};
  }
  json doc = {{"alpha", params.alpha}, {"beta", params.beta}, {"languages", languages}};
  return doc.dump(2) + "\n";
}

}  // namespace asrkit
