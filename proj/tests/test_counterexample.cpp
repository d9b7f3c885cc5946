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

#include "greedy_certify/counterexample.hpp"

#include <gtest/gtest.h>

#include <chrono>

#include "json.hpp"

namespace greedy_certify {
namespace {

TEST(Counterexample, TableValues) {
  const auto p = build_counterexample();
  EXPECT_EQ(p.value(StringSeq{kW}), rational(1, 3));
  EXPECT_EQ(p.value(StringSeq{kZ, kY, kX}), rational(34, 3));
  EXPECT_EQ(p.value(StringSeq{kZ, kW}), rational(5, 6));
  EXPECT_EQ(p.value(StringSeq{kW, kX, kY, kZ}), rational(34, 3));
  EXPECT_FALSE(p.member(StringSeq{kW, kX, kY, kZ}));
}

TEST(Counterexample, GreedyPicksYThenXThenZ) {
  const auto p = build_counterexample();
  const auto t = run_greedy(p);
  EXPECT_EQ(t.choices, (StringSeq{kY, kX, kZ}));
  EXPECT_EQ(t.increments[0], rational(10));
  EXPECT_EQ(t.increments[1], rational(1));
  EXPECT_EQ(t.increments[2], rational(1, 3));
}

TEST(Counterexample, AlphaIsTwoFromW) {
  const auto p = build_counterexample();
  const auto t = run_greedy(p);
  EXPECT_EQ(alpha_G_prime_gamma(p, t), rational(2));
  // The z branch alone: f(z) / Delta(y x z) = (1/2) / (1/3).
  EXPECT_EQ(p.value(StringSeq{kZ}) / increment(p, t.prefix(2), kZ), rational(3, 2));
}

TEST(Counterexample, AlphaIsOneForModularTable) {
  auto d = counterexample_table();
  for (auto& [seq, v] : d.values) {
    Rational sum = 0;
    for (SymbolId s : seq) sum += d.values.at(StringSeq{s});
    v = sum;
  }
  const auto p = make_tabulated_problem(d);
  EXPECT_EQ(alpha_G_prime_gamma(p, run_greedy(p)), rational(1));
}

TEST(Counterexample, ZeroIncrementIsReported) {
  auto d = counterexample_table();
  d.set(StringSeq{kW, kX, kY}, rational(11));
  const auto p = make_tabulated_problem(d);
  EXPECT_THROW(alpha_G_prime_gamma(p, run_greedy(p)), ZeroIncrement);
}

TEST(Counterexample, SixChecksPass) {
  const auto rep = verify_counterexample(build_counterexample());
  ASSERT_EQ(rep.checks.size(), 6u);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.actual;
  EXPECT_TRUE(rep.all_passed());
  EXPECT_NO_THROW(rep.require());
  EXPECT_EQ(rep.lhs, rational(39, 2));
  EXPECT_EQ(rep.rhs, rational(38, 3));
  EXPECT_EQ(rep.opt.value, rational(34, 3));
}

TEST(Counterexample, EditedTableIsRecomputed) {
  auto d = counterexample_table();
  d.set(StringSeq{kW}, rational(1, 2));
  const auto rep = verify_counterexample(make_tabulated_problem(d));
  EXPECT_EQ(rep.alpha_gamma, rational(3));
  EXPECT_EQ(rep.rhs, rational(14));
  EXPECT_FALSE(rep.checks[3].passed);
  EXPECT_TRUE(rep.checks[4].passed);
  EXPECT_TRUE(rep.checks[5].passed);
  EXPECT_FALSE(rep.all_passed());
  EXPECT_THROW(rep.require(), ReproductionMismatch);
}

TEST(Counterexample, JsonRoundTripIsExact) {
  const auto j = tabulated_to_json(counterexample_table());
  const auto parsed = nlohmann::ordered_json::parse(j.dump());
  ASSERT_TRUE(tabulated_json_is_exact(parsed));
  const auto back = tabulated_from_json<Rational>(parsed);
  EXPECT_EQ(back.values, counterexample_table().values);
  EXPECT_TRUE(verify_counterexample(make_tabulated_problem(back)).all_passed());
}

TEST(Counterexample, RunsWellUnderASecond) {
  const auto start = std::chrono::steady_clock::now();
  const auto rep = verify_counterexample(build_counterexample());
  const auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_TRUE(rep.all_passed());
  EXPECT_LT(std::chrono::duration<double>(elapsed).count(), 1.0);
}

}  // namespace
}  // namespace greedy_certify
