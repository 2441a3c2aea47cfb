// Copyright 2026 The Graphbench Authors
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

// Bundled pseudo-code assets, one per (task, style), stored as
// assets/pseudocode/<task>.<style>.txt and compiled into the library.

#ifndef GRAPHBENCH_PSEUDOCODE_H_
#define GRAPHBENCH_PSEUDOCODE_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "graphbench/task.h"

namespace graphbench {

enum class PseudoStyle : uint8_t {
  kPython,         // Python function
  kPlain,          // plain pseudo-code, single routine (the default)
  kMultiFunction,  // decomposed into named helper routines
};

inline constexpr PseudoStyle kAllStyles[] = {
    PseudoStyle::kPython, PseudoStyle::kPlain, PseudoStyle::kMultiFunction};

std::string_view StyleSlug(PseudoStyle style);  // "python", "pseudo", "multi"
// Also accepts the numeric aliases 1, 2, 3 in the order above.
absl::StatusOr<PseudoStyle> ParseStyle(std::string_view text);

// "<task>.<style>.txt"
std::string PseudocodeAssetName(TaskKind task, PseudoStyle style);

// Fails with kNotFound if the asset was not bundled.
absl::StatusOr<std::string_view> PseudocodeFor(TaskKind task,
                                               PseudoStyle style);

// Every bundled asset keyed by file name.
const std::map<std::string, std::string_view>& AllPseudocodeAssets();

}  // namespace graphbench

#endif  // GRAPHBENCH_PSEUDOCODE_H_
