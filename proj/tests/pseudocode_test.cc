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

#include <fstream>
#include <map>
#include <sstream>

#include "graphbench/digest.h"
#include "gtest/gtest.h"

namespace graphbench {
namespace {

// sha256sum output for assets/pseudocode, checked in alongside the tests.
std::map<std::string, std::string> PinnedHashes() {
  std::ifstream in(std::string(GRAPHBENCH_TEST_DATA_DIR) +
                   "/fixtures/pseudocode.sha256");
  std::map<std::string, std::string> out;
  std::string hash, name;
  while (in >> hash >> name) out[name] = hash;
  return out;
}

TEST(PseudocodeTest, ThirtyAssetsBundled) {
  EXPECT_EQ(AllPseudocodeAssets().size(), 30u);
  for (TaskKind task : kAllTasks) {
    for (PseudoStyle style : kAllStyles) {
      absl::StatusOr<std::string_view> text = PseudocodeFor(task, style);
      ASSERT_TRUE(text.ok()) << PseudocodeAssetName(task, style);
      EXPECT_FALSE(text->empty());
    }
  }
}

TEST(PseudocodeTest, AssetsMatchPinnedHashes) {
  const std::map<std::string, std::string> pinned = PinnedHashes();
  ASSERT_EQ(pinned.size(), 30u);
  for (const auto& [name, text] : AllPseudocodeAssets()) {
    auto it = pinned.find(name);
    ASSERT_NE(it, pinned.end()) << name;
    EXPECT_EQ(Sha256Hex(text), it->second) << name;
  }
}

TEST(PseudocodeTest, AssetNames) {
  EXPECT_EQ(PseudocodeAssetName(TaskKind::kCycleCheck, PseudoStyle::kPython),
            "cycle_check.python.txt");
  EXPECT_EQ(PseudocodeAssetName(TaskKind::kMinimumSpanningTree,
                                PseudoStyle::kMultiFunction),
            "mst.multi.txt");
}

TEST(PseudocodeTest, StylesAreDistinctPerTask) {
  for (TaskKind task : kAllTasks) {
    EXPECT_NE(*PseudocodeFor(task, PseudoStyle::kPython),
              *PseudocodeFor(task, PseudoStyle::kPlain));
    EXPECT_NE(*PseudocodeFor(task, PseudoStyle::kPlain),
              *PseudocodeFor(task, PseudoStyle::kMultiFunction));
  }
}

TEST(PseudocodeTest, ParseStyle) {
  for (PseudoStyle s : kAllStyles) EXPECT_EQ(*ParseStyle(StyleSlug(s)), s);
  EXPECT_EQ(*ParseStyle("1"), PseudoStyle::kPython);
  EXPECT_EQ(*ParseStyle("2"), PseudoStyle::kPlain);
  EXPECT_EQ(*ParseStyle("3"), PseudoStyle::kMultiFunction);
  EXPECT_FALSE(ParseStyle("4").ok());
  EXPECT_FALSE(ParseStyle("java").ok());
}

}  // namespace
}  // namespace graphbench
