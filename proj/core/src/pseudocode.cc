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

#include "graphbench/pseudocode.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace graphbench {
namespace internal {
// Defined in the generated embedded_pseudocode.cc.
const std::map<std::string, std::string_view>& EmbeddedPseudocode();
}  // namespace internal

std::string_view StyleSlug(PseudoStyle style) {
  switch (style) {
    case PseudoStyle::kPython: return "python";
    case PseudoStyle::kPlain: return "pseudo";
    case PseudoStyle::kMultiFunction: return "multi";
  }
  return "?";
}

absl::StatusOr<PseudoStyle> ParseStyle(std::string_view text) {
  if (text == "python" || text == "1") return PseudoStyle::kPython;
  if (text == "pseudo" || text == "2") return PseudoStyle::kPlain;
  if (text == "multi" || text == "3") return PseudoStyle::kMultiFunction;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown pseudo-code style '", std::string(text),
                   "' (expected python, pseudo or multi)"));
}

std::string PseudocodeAssetName(TaskKind task, PseudoStyle style) {
  return absl::StrCat(std::string(TaskSlug(task)), ".", std::string(StyleSlug(style)), ".txt");
}

absl::StatusOr<std::string_view> PseudocodeFor(TaskKind task,
                                               PseudoStyle style) {
  const std::string name = PseudocodeAssetName(task, style);
  const auto& assets = internal::EmbeddedPseudocode();
  auto it = assets.find(name);
  if (it == assets.end()) {
    return absl::NotFoundError(absl::StrCat("missing pseudo-code asset ", name));
  }
  return it->second;
}

const std::map<std::string, std::string_view>& AllPseudocodeAssets() {
  return internal::EmbeddedPseudocode();
}

}  // namespace graphbench
