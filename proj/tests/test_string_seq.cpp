// Copyright 2026 The Authors.
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

#include "greedy_certify/string_seq.hpp"

#include <gtest/gtest.h>

#include <unordered_set>

namespace greedy_certify {
namespace {

TEST(StringSeq, ConcatenationKeepsOrder) {
  const StringSeq a{0, 1};
  const StringSeq b{2};
  EXPECT_EQ(concat(a, b), (StringSeq{0, 1, 2}));
  EXPECT_EQ(concat(b, a), (StringSeq{2, 0, 1}));
  EXPECT_EQ(concat(StringSeq{}, a), a);
}

TEST(StringSeq, PrefixRelation) {
  const StringSeq s{3, 1, 2};
  EXPECT_TRUE(is_prefix(StringSeq{}, s));
  EXPECT_TRUE(is_prefix(StringSeq{3}, s));
  EXPECT_TRUE(is_prefix(StringSeq{3, 1}, s));
  EXPECT_TRUE(is_prefix(s, s));
  EXPECT_FALSE(is_prefix(StringSeq{1}, s));
  EXPECT_FALSE(is_prefix(StringSeq{3, 1, 2, 0}, s));
  EXPECT_EQ(s.prefix(2), (StringSeq{3, 1}));
  EXPECT_EQ(s.prefix(0), StringSeq{});
}

TEST(StringSeq, ComponentsForgetOrderAndRepeats) {
  EXPECT_EQ(components(StringSeq{2, 0, 2, 1}), (std::set<SymbolId>{0, 1, 2}));
  EXPECT_TRUE(components(StringSeq{}).empty());
}

TEST(StringSeq, RepeatsDetected) {
  const StringSeq with{1, 0, 1};
  const StringSeq without{1, 0, 2};
  EXPECT_TRUE(has_repeats(with.view()));
  EXPECT_FALSE(has_repeats(without.view()));
}

TEST(StringSeq, LexicographicOrderPutsPrefixFirst) {
  EXPECT_LT(StringSeq{}, StringSeq{0});
  EXPECT_LT((StringSeq{0}), (StringSeq{0, 0}));
  EXPECT_LT((StringSeq{0, 5}), (StringSeq{1}));
}

TEST(StringSeq, ExtendedLeavesOriginalAlone) {
  const StringSeq s{1};
  const StringSeq t = s.extended(4);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(t, (StringSeq{1, 4}));
}

TEST(StringSeq, HashSeparatesOrder) {
  std::unordered_set<StringSeq, StringSeqHash> set{StringSeq{0, 1}, StringSeq{1, 0}, StringSeq{0, 1}};
  EXPECT_EQ(set.size(), 2u);
}

TEST(StringSeq, NamedRendering) {
  const std::vector<std::string> names{"w", "x", "y", "z"};
  EXPECT_EQ(to_string(StringSeq{2, 1, 3}, names), "(y, x, z)");
  EXPECT_EQ(to_string(StringSeq{}, names), "()");
  EXPECT_EQ(to_string(StringSeq{0, 7}), "(0, 7)");
}

}  // namespace
}  // namespace greedy_certify
