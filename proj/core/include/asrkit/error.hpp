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

#include <stdexcept>
#include <string>

namespace asrkit {

// Input failed validation (malformed record, bad parameter, unknown key).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs are well formed but the requested computation has no solution,
// e.g. a CTC target that cannot fit into the available frames.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace asrkit
