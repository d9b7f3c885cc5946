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

#include "greedy_certify/problem.hpp"

#include <gtest/gtest.h>

#include <memory>
#include <stdexcept>

#include "greedy_certify/tabulated.hpp"
#include "test_support.hpp"

namespace greedy_certify {
namespace {

TEST(UniformDomain, RankAndRepeats) {
  const UniformDomain no_repeats(3, 2, false);
  EXPECT_TRUE(no_repeats.member(StringSeq{}.view()));
  EXPECT_TRUE(no_repeats.member(StringSeq{0, 2}.view()));
  EXPECT_FALSE(no_repeats.member(StringSeq{1, 1}.view()));
  EXPECT_FALSE(no_repeats.member(StringSeq{0, 1, 2}.view()));
  EXPECT_FALSE(no_repeats.member(StringSeq{3}.view()));
  EXPECT_EQ(no_repeats.feasible_next(StringSeq{1}.view(), 3), (std::vector<SymbolId>{0, 2}));
  EXPECT_TRUE(no_repeats.feasible_next(StringSeq{0, 1}.view(), 3).empty());

  const UniformDomain repeats(3, 2, true);
  EXPECT_TRUE(repeats.member(StringSeq{1, 1}.view()));
  EXPECT_EQ(repeats.feasible_next(StringSeq{1}.view(), 3), (std::vector<SymbolId>{0, 1, 2}));
}

TEST(ProblemInstance, RejectsDegenerateShapes) {
  auto f = make_objective<double>([](std::span<const SymbolId>) { return 0.0; });
  auto t = std::make_shared<UniformDomain>(2, 1, false);
  EXPECT_THROW(ProblemInstance<double>(0, 1, f, t), std::invalid_argument);
  EXPECT_THROW(ProblemInstance<double>(2, 0, f, t), std::invalid_argument);
  EXPECT_THROW(ProblemInstance<double>(2, 1, nullptr, t), std::invalid_argument);
  EXPECT_THROW(ProblemInstance<double>(2, 1, f, nullptr), std::invalid_argument);
}

TEST(ProblemInstance, MemoisesValues) {
  const auto p = testing::modular_problem({1.0, 2.0, 4.0}, 2);
  EXPECT_DOUBLE_EQ(p.value(StringSeq{0, 2}), 5.0);
  EXPECT_DOUBLE_EQ(p.value(StringSeq{0, 2}), 5.0);
  EXPECT_EQ(p.evaluations(), 1u);
  const auto ext = p.extension_values(StringSeq{0}, std::vector<SymbolId>{1, 2});
  EXPECT_EQ(ext, (std::vector<double>{3.0, 5.0}));
  EXPECT_EQ(p.evaluations(), 2u);  // (0, 2) came from the memo
}

TEST(ProblemInstance, MemoCanBeDisabled) {
  auto p = testing::modular_problem({1.0, 2.0}, 2);
  p.set_memoize(false);
  p.value(StringSeq{0});
  p.value(StringSeq{0});
  EXPECT_EQ(p.evaluations(), 2u);
  EXPECT_EQ(p.cache_size(), 0u);
}

TEST(ProblemInstance, UndefinedSequencesThrow) {
  const auto p = make_tabulated_problem(testing::t1_table<double>());
  EXPECT_FALSE(p.defined(StringSeq{0, 0}));
  EXPECT_THROW(p.value(StringSeq{0, 0}), UndefinedValue);
}

TEST(ProblemInstance, WithHorizonKeepsOracles) {
  const auto p = testing::modular_problem({1.0, 2.0, 4.0}, 3);
  const auto q = p.with_horizon(1);
  EXPECT_EQ(q.horizon(), 1u);
  EXPECT_EQ(q.ground_size(), 3u);
  EXPECT_DOUBLE_EQ(q.value(StringSeq{2}), 4.0);
}

TEST(ProblemInstance, DescribeUsesNames) {
  const auto p = make_tabulated_problem(testing::t1_table<double>());
  EXPECT_EQ(p.describe(StringSeq{1, 0}), "(b, a)");
}

}  // namespace
}  // namespace greedy_certify
