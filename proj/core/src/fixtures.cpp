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

#include "asrkit/fixtures.hpp"

#include <array>

namespace asrkit::fixtures {
namespace {

struct Row {
  const char* lang;
  double asr_granary;
  double asr_nemo;
  double x_en_granary;
  double x_en_nemo;
  double en_x_nemo;
  double en_x_supplementary;
};

// clang-format off
constexpr std::array<Row, 24> kRows{{
    {"bg", 13986.55,    9.49, 13875.61,    9.30, 8346.43, 20194.40},
    {"cs", 15043.85,   58.56, 14936.10,   57.92, 8408.30, 20231.86},
    {"da", 10104.41,   13.08, 10068.36,   12.80, 8041.09, 20113.59},
    {"de", 29279.61, 2602.24, 28974.96, 2509.15, 8781.31, 20267.06},
    {"el", 11008.78,   24.89, 10927.85,   23.20, 8472.81, 20259.95},
    {"es", 45812.67, 1505.47, 45353.29, 1406.23, 8505.52, 20272.88},
    {"et",  7983.65,   10.54,  7942.66,   10.44, 8453.49, 20129.90},
    {"fi", 10856.40,   17.32, 10841.47,   17.00, 8484.42, 20262.53},
    {"fr", 39226.50, 1989.65, 38626.92, 1998.26, 8482.86, 20259.14},
    {"hr",  5285.79, 1671.12,  5273.91, 1646.91, 5119.01, 14850.72},
    {"hu", 11818.71,   65.15, 11729.05,   64.46, 8452.52, 20234.48},
    {"it", 22962.30,  515.16, 22896.12,  521.30, 8515.96, 20269.42},
    {"lt", 10775.43,   20.10, 10731.04,   19.70, 8410.20, 20213.40},
    {"lv",  9311.46,    8.58,  9213.82,    8.46, 8663.14, 20145.42},
    {"mt",  4009.81,   13.98,  3524.11,   13.67, 7078.29, 19519.90},
    {"nl", 13997.41,    9.64, 13957.39,   14.79, 8477.62, 20275.66},
    {"pl", 17202.73,  316.13, 17071.60,  308.58, 8505.21, 20272.97},
    {"pt", 29869.11,   16.99, 29505.53,   20.22, 8478.27, 20284.43},
    {"ro", 12419.03,   21.49, 12368.69,   21.20, 8451.23, 20253.89},
    {"ru", 20460.39, 1716.46, 19595.31, 1263.28, 8511.02, 20262.18},
    {"sk",  4467.62,   22.54,  4439.20,   21.67, 7475.55, 19374.72},
    {"sl",  5851.59,    9.41,  5826.37,    9.53, 7688.19, 19301.57},
    {"sv", 10014.93,   10.09,  9991.90,    9.88, 8735.76, 20253.51},
    {"uk",   932.67,  191.06,   613.14,  177.06, 8482.46, 20236.27},
}};
// clang-format on

constexpr double kEnglishAsrGranary = 275548.32;
constexpr double kEnglishAsrNemo = 9003.94;

}  // namespace

DataInventory european_training_hours() {
  DataInventory inv;
  for (const Row& row : kRows) {
    const auto asr = LanguageKey::from_pair(row.lang, row.lang);
    const auto x_en = LanguageKey::from_pair(row.lang, "en");
    const auto en_x = LanguageKey::from_pair("en", row.lang);
    inv.add_hours(asr, "granary", row.asr_granary);
    inv.add_hours(asr, "nemo", row.asr_nemo);
    inv.add_hours(x_en, "granary", row.x_en_granary);
    inv.add_hours(x_en, "nemo", row.x_en_nemo);
    inv.add_hours(en_x, "nemo", row.en_x_nemo);
    inv.add_hours(en_x, "supplementary", row.en_x_supplementary);
  }
  const auto en = LanguageKey::from_pair("en", "en");
  inv.add_hours(en, "granary", kEnglishAsrGranary);
  inv.add_hours(en, "nemo", kEnglishAsrNemo);
  return inv;
}

}  // namespace asrkit::fixtures
