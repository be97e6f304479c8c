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

#include "asrkit/inventory.hpp"

namespace asrkit::fixtures {

/// Published per-language training hours for the 25-language European
/// setup, split by task and corpus.
///
/// Keys: "xx" (ASR, corpora "granary" and "nemo"), "xx-en" (X->En,
/// "granary" and "nemo"), "en-xx" (En->X, "nemo" and "supplementary").
/// English contributes ASR only. 73 language keys in total.
DataInventory european_training_hours();

}  // namespace asrkit::fixtures
