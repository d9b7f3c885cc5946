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

#include "greedy_certify/bounds.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "greedy_certify/counterexample.hpp"
#include "greedy_certify/tabulated.hpp"
#include "test_support.hpp"

namespace greedy_certify {
namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p) / Rational(d); }

class CounterexampleBounds : public ::testing::Test {
 protected:
  ProblemInstance<Rational> problem = build_counterexample();
  GreedyTrace<Rational> trace = run_greedy(problem);
};

TEST_F(CounterexampleBounds, EpochMaximaAndBs) {
  const auto bs = compute_Bs(problem, trace);
  EXPECT_EQ(bs.maxima, (std::vector<Rational>{q(10), q(9), q(1, 2)}));
  EXPECT_EQ(bs.maximizers, (std::vector<SymbolId>{kY, kX, kZ}));
  EXPECT_EQ(bs.total, q(39, 2));
  EXPECT_EQ(trace.epoch_maxima, bs.maxima);
  // c_1 is always f(g_1).
  EXPECT_EQ(bs.maxima.front(), trace.first_value());
}

TEST_F(CounterexampleBounds, GammaGAttainedAtEpochTwoSymbolX) {
  const auto g = compute_gamma_G(problem, trace);
  ASSERT_TRUE(g.defined());
  EXPECT_EQ(g.value, q(9));
  EXPECT_EQ(g.epoch, 2u);
  EXPECT_EQ(g.symbol, kX);
  EXPECT_EQ(g.increment, q(1));
}

TEST_F(CounterexampleBounds, SigmaOfThreeSymbolsIsEveryOrdering) {
  const auto sigma = compute_sigma_T(problem, {kX, kY, kZ});
  ASSERT_EQ(sigma.size(), 6u);
  EXPECT_EQ(sigma.front(), (StringSeq{kX, kY, kZ}));
  EXPECT_EQ(sigma.back(), (StringSeq{kZ, kY, kX}));
}

TEST_F(CounterexampleBounds, GammaGppUndefinedWithWitnessW) {
  const auto g = compute_gamma_Gpp(problem, trace);
  EXPECT_EQ(g.status, Availability::kUndefined);
  EXPECT_EQ(g.symbol, kW);
  EXPECT_EQ(g.base, (StringSeq{kX, kY, kZ}));
  EXPECT_EQ(g.increment, q(0));
}

TEST_F(CounterexampleBounds, ReportPinsRegressionConstants) {
  const auto r = compute_bound_report(problem, trace);
  EXPECT_EQ(r.B_s, q(39, 2));
  EXPECT_EQ(r.f_GK, q(34, 3));
  EXPECT_EQ(r.f_g1, q(10));
  ASSERT_TRUE(r.beta1_G.has_value());
  EXPECT_EQ(*r.beta1_G, q(11, 27));
  EXPECT_FALSE(r.beta1_Gpp.has_value());
  EXPECT_EQ(r.beta2, q(68, 117));
  EXPECT_NEAR(r.beta0, 1.0 - std::pow(2.0 / 3.0, 3), 1e-15);
}

TEST(Bounds, CombinedBoundOnCounterexampleValues) {
  // 1/9 + (8/9)(20/39) = 39/351 + 160/351.
  EXPECT_EQ(combined_bound(q(9), q(10), q(39, 2)), q(199, 351));
  EXPECT_GT(combined_bound(q(9), q(10), q(39, 2)), beta1(q(9), 3));
}

TEST(Bounds, Beta0ReferenceValues) {
  EXPECT_DOUBLE_EQ(beta0(1), 1.0);
  EXPECT_DOUBLE_EQ(beta0(2), 0.75);
  EXPECT_NEAR(beta0(5), 0.67232, 1e-12);
  const double limit = 1.0 - std::exp(-1.0);
  for (std::size_t k = 1; k <= 10000; ++k) ASSERT_GT(beta0(k), limit) << k;
  EXPECT_THROW(beta0(0), std::invalid_argument);
}

TEST(Bounds, Beta1Examples) {
  EXPECT_EQ(beta1(q(1), 5), q(1));
  EXPECT_EQ(beta1(q(9), 3), q(11, 27));
  EXPECT_EQ(beta1(q(2), 2), q(3, 4));
  EXPECT_THROW(beta1(q(1, 2), 3), GammaBelowOne);
}

TEST(Bounds, Beta2RequiresPositiveBs) {
  EXPECT_EQ(beta2(q(4), q(5)), q(4, 5));
  EXPECT_THROW(beta2(q(1), q(0)), NonpositiveBound);
  EXPECT_THROW(beta2(1.0, -1.0), NonpositiveBound);
}

TEST(Bounds, T1Instance) {
  const auto p = make_tabulated_problem(testing::t1_table<Rational>());
  auto trace = run_greedy(p);
  const auto r = compute_bound_report(p, trace);
  EXPECT_EQ(r.B_s, q(5));
  EXPECT_EQ(r.epoch_maxima, (std::vector<Rational>{q(3), q(2)}));
  EXPECT_EQ(r.gamma_G.value, q(2));
  ASSERT_TRUE(r.gamma_Gpp.defined());
  EXPECT_EQ(r.gamma_Gpp.value, q(2));
  EXPECT_EQ(r.gamma_Gpp.base, (StringSeq{0}));
  EXPECT_EQ(*r.beta1_G, q(3, 4));
  EXPECT_EQ(r.beta2, q(4, 5));
}

TEST(Bounds, HorizonOneGivesUnitGamma) {
  const auto p = testing::modular_problem({1.0, 3.0}, 1);
  auto trace = run_greedy(p);
  const auto r = compute_bound_report(p, trace);
  EXPECT_TRUE(r.gamma_G.defined());
  EXPECT_DOUBLE_EQ(r.gamma_G.value, 1.0);
  EXPECT_DOUBLE_EQ(*r.beta1_G, 1.0);
  EXPECT_DOUBLE_EQ(r.beta2, 1.0);
}

TEST(Bounds, ModularFunctionHasUnitCurvature) {
  const auto p = testing::modular_problem({1.0, 2.0, 3.0, 4.0}, 3);
  auto trace = run_greedy(p);
  const auto r = compute_bound_report(p, trace);
  EXPECT_NEAR(r.gamma_G.value, 1.0, 1e-12);
  EXPECT_NEAR(*r.beta1_G, 1.0, 1e-12);
  // B_s = 4 + 3 + 2 = f(G_3).
  EXPECT_NEAR(r.beta2, 1.0, 1e-12);
}

TEST(Bounds, GammaGppSkippedAboveGuard) {
  const auto p = testing::modular_problem(std::vector<double>(5, 1.0), 4);
  auto trace = run_greedy(p);
  EXPECT_EQ(compute_gamma_Gpp(p, trace).status, Availability::kDefined);
  EXPECT_EQ(compute_gamma_Gpp(p, trace, {4, 6}).status, Availability::kSkipped);
  EXPECT_EQ(compute_gamma_Gpp(p, trace, {5, 3}).status, Availability::kSkipped);
}

TEST(Bounds, SigmaGuard) {
  const auto p = testing::modular_problem(std::vector<double>(10, 1.0), 2);
  EXPECT_THROW(compute_sigma_T(p, {0, 1, 2, 3, 4, 5, 6, 7, 8}), SizeGuard);
}

TEST(Bounds, NonPositiveIncrementMakesGammaUndefined) {
  // f(ab) = f(a): Delta = 0 along the greedy trajectory.
  auto d = testing::t1_table<double>();
  d.set(StringSeq{0, 1}, 3.0);
  const auto p = make_tabulated_problem(d);
  auto trace = run_greedy(p);
  const auto g = compute_gamma_G(p, trace);
  EXPECT_EQ(g.status, Availability::kUndefined);
  EXPECT_EQ(g.symbol, SymbolId{1});
  EXPECT_EQ(g.epoch, 2u);
}

}  // namespace
}  // namespace greedy_certify
