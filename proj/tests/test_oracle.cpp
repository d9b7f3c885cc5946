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

#include "greedy_certify/oracle.hpp"

#include <gtest/gtest.h>

#include <memory>

#include "greedy_certify/counterexample.hpp"
#include "greedy_certify/random_instances.hpp"
#include "greedy_certify/suite.hpp"
#include "greedy_certify/tabulated.hpp"
#include "test_support.hpp"

namespace greedy_certify {
namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p) / Rational(d); }

// Every failing verdict must carry a witness that replays.
template <class V>
void expect_witnesses_replay(const ProblemInstance<V>& p, const AssumptionReport<V>& r) {
  for (std::size_t i = 1; i <= 7; ++i) {
    if (!r[i].fails()) continue;
    ASSERT_TRUE(r[i].witness.has_value()) << "A" << i;
    EXPECT_TRUE(witness_replays(p, *r[i].witness)) << "A" << i << ": " << r[i].witness->description;
  }
}

struct Checked {
  GreedyTrace<double> trace;
  OptResult<double> opt;
  AssumptionReport<double> a;
};

Checked check(const ProblemInstance<double>& p) {
  Checked c;
  c.trace = run_greedy(p);
  c.opt = brute_force_optimal(p);
  c.a = check_assumptions(p, c.trace, c.opt);
  return c;
}

TEST(BruteForce, T1) {
  const auto p = make_tabulated_problem(testing::t1_table<Rational>());
  const auto opt = brute_force_optimal(p);
  EXPECT_EQ(opt.best, (StringSeq{0, 1}));
  EXPECT_EQ(opt.value, q(4));
  EXPECT_EQ(opt.explored, 5u);  // (), (a), (a, b), (b), (b, a)
  EXPECT_EQ(opt.optima.size(), 2u);
}

TEST(BruteForce, CounterexampleOptimumIsXyz) {
  const auto opt = brute_force_optimal(build_counterexample());
  EXPECT_EQ(opt.best, (StringSeq{kX, kY, kZ}));
  EXPECT_EQ(opt.value, q(34, 3));
}

TEST(BruteForce, FindsShorterOptimum) {
  auto d = testing::t1_table<double>();
  d.set(StringSeq{0, 1}, 1.0);
  const auto opt = brute_force_optimal(make_tabulated_problem(d));
  EXPECT_EQ(opt.best, (StringSeq{0}));
  EXPECT_DOUBLE_EQ(opt.value, 3.0);
}

TEST(BruteForce, DominatesEveryFeasibleString) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto p = make_tabulated_problem(
        random_set_instance({5, 3, SetFamily::kUnstructured, SetDomain::kPartition}, seed));
    const auto opt = brute_force_optimal(p);
    enumerate_domain(p, p.horizon(), 1'000'000, [&](const StringSeq&, const double& v) {
      EXPECT_LE(v, opt.value);
      return true;
    });
  }
}

TEST(BruteForce, CapRaisesSearchSpaceTooLarge) {
  const auto p = testing::modular_problem(std::vector<double>(8, 1.0), 4);
  EXPECT_THROW(brute_force_optimal(p, 100), SearchSpaceTooLarge);
}

TEST(Assumptions, T1AllHold) {
  const auto p = make_tabulated_problem(testing::t1_table<double>());
  const auto c = check(p);
  for (std::size_t i = 1; i <= 7; ++i) EXPECT_TRUE(c.a[i].holds()) << "A" << i;
}

TEST(Assumptions, CounterexampleA7FailsAtW) {
  const auto p = build_counterexample();
  auto trace = run_greedy(p);
  const auto opt = brute_force_optimal(p);
  const auto a = check_assumptions(p, trace, opt);
  for (std::size_t i = 1; i <= 6; ++i) EXPECT_TRUE(a[i].holds()) << "A" << i;
  ASSERT_TRUE(a[7].fails());
  const auto& w = *a[7].witness;
  EXPECT_EQ(w.expression, q(0));
  EXPECT_EQ(w.terms.front().second, (StringSeq{kX, kY, kZ, kW}));
  EXPECT_TRUE(witness_replays(p, w));
  // The optimum (x, y, z) qualifies once reordered along the greedy epochs.
  EXPECT_EQ(a.optimum_ordering, (StringSeq{kY, kX, kZ}));
}

TEST(Assumptions, A1FailsWhenOptimumLeavesTheGreedyMatroid) {
  // 2 is not feasible on its own, so o_2 = 2 violates A1.
  TabulatedData<double> d;
  d.ground_size = 3;
  d.horizon = 2;
  d.set(StringSeq{0}, 5.0);
  d.set(StringSeq{1}, 4.0);
  d.set(StringSeq{0, 1}, 6.0);
  d.set(StringSeq{1, 2}, 10.0);
  const auto p = make_tabulated_problem(d);
  const auto c = check(p);
  EXPECT_EQ(c.opt.best, (StringSeq{1, 2}));
  ASSERT_TRUE(c.a[1].fails());
  EXPECT_FALSE(c.a.any_optimum_satisfies_a1);
  expect_witnesses_replay(p, c.a);
}

TEST(Assumptions, A2FailsForSupermodularPair) {
  auto d = testing::t1_table<double>();
  d.set(StringSeq{0, 1}, 6.0);
  const auto p = make_tabulated_problem(d);
  const auto c = check(p);
  ASSERT_TRUE(c.a[2].fails());
  EXPECT_DOUBLE_EQ(c.a[2].witness->expression, 1.0);
  expect_witnesses_replay(p, c.a);
}

TEST(Assumptions, A3FailsForNonzeroEmptyValue) {
  auto f = make_objective<double>([](std::span<const SymbolId> s) { return 1.0 + s.size(); });
  const ProblemInstance<double> p(2, 2, f, std::make_shared<UniformDomain>(2, 2, false));
  const auto c = check(p);
  EXPECT_TRUE(c.a[3].fails());
  expect_witnesses_replay(p, c.a);
}

TEST(Assumptions, A4AndA5FailWhenValueDrops) {
  auto d = testing::t1_table<double>();
  d.set(StringSeq{0, 1}, 2.0);
  const auto p = make_tabulated_problem(d);
  const auto c = check(p);
  EXPECT_TRUE(c.a[4].fails());
  EXPECT_TRUE(c.a[5].fails());
  expect_witnesses_replay(p, c.a);
}

TEST(Assumptions, A6A7UncheckedAboveGuard) {
  const auto p = testing::modular_problem(std::vector<double>(9, 1.0), 2);
  const auto c = check(p);
  EXPECT_EQ(c.a[6].status, CheckStatus::kUnchecked);
  EXPECT_EQ(c.a[7].status, CheckStatus::kUnchecked);
}

TEST(Assumptions, A4SampledWhenDomainIsLarge) {
  const auto p = testing::modular_problem(std::vector<double>(8, 1.0), 6);
  auto trace = run_greedy(p);
  const auto opt = brute_force_optimal(p);
  VerifyOptions o;
  o.enumeration_cap = 50;
  o.samples = 20;
  const auto a = check_assumptions(p, trace, opt, o);
  EXPECT_TRUE(a[4].holds());
  EXPECT_TRUE(a[4].sampled);
  EXPECT_EQ(a[4].label(), "holds (sampled)");
}

TEST(Assumptions, RandomWitnessesAlwaysReplay) {
  SuiteConfig config;
  for (std::size_t i = 0; i < 150; ++i) {
    config.kind = i % 2 ? SuiteKind::kString : SuiteKind::kSet;
    const auto p = make_tabulated_problem(suite_instance(config, i));
    const auto c = check(p);
    expect_witnesses_replay(p, c.a);
  }
}

TEST(SetSubmodularity, CounterexampleHolds) {
  EXPECT_TRUE(check_set_submodular(build_counterexample()).holds());
}

TEST(SetSubmodularity, EditedTableFailsWithReplayableWitness) {
  auto d = counterexample_table();
  d.set(StringSeq{kW, kX, kY, kZ}, q(13));
  const auto p = make_tabulated_problem(d);
  const auto v = check_set_submodular(p);
  ASSERT_TRUE(v.fails());
  EXPECT_TRUE(witness_replays(p, *v.witness));
}

TEST(SetSubmodularity, RejectsStringProblems) {
  const auto p = make_tabulated_problem(random_string_instance(2, 2, 1));
  EXPECT_THROW(check_set_submodular(p), NotASetProblem);
}

ProblemInstance<double> discounted_string_problem(std::size_t n, std::size_t k) {
  // f(s_1 ... s_m) = sum_i w(s_i) 2^-(i-1): forward monotone, diminishing.
  auto f = make_objective<double>([](std::span<const SymbolId> s) {
    double v = 0.0, scale = 1.0;
    for (SymbolId x : s) {
      v += (1.0 + x) * scale;
      scale /= 2;
    }
    return v;
  });
  return ProblemInstance<double>(n, k, f, std::make_shared<UniformDomain>(n, k, true));
}

TEST(StringSubmodularity, DiscountedSumHoldsExhaustively) {
  const auto v = check_string_submodular(discounted_string_problem(3, 3), 100);
  EXPECT_TRUE(v.holds());
  EXPECT_FALSE(v.sampled);
}

TEST(StringSubmodularity, ConvexLengthFails) {
  auto f = make_objective<double>(
      [](std::span<const SymbolId> s) { return double(s.size() * s.size()); });
  const ProblemInstance<double> p(2, 3, f, std::make_shared<UniformDomain>(2, 3, true));
  const auto v = check_string_submodular(p, 100);
  ASSERT_TRUE(v.fails());
  EXPECT_TRUE(witness_replays(p, *v.witness));
}

TEST(StringSubmodularity, LargeDomainsAreSampled) {
  const auto v = check_string_submodular(discounted_string_problem(40, 4), 100, 9);
  EXPECT_TRUE(v.holds());
  EXPECT_TRUE(v.sampled);
}

TEST(StringMatroid, UniformDomainHolds) {
  EXPECT_TRUE(check_string_matroid(testing::modular_problem({1, 2, 3}, 2)).holds());
}

TEST(StringMatroid, MissingPrefixFails) {
  TabulatedData<double> d;
  d.ground_size = 2;
  d.horizon = 2;
  d.set(StringSeq{1}, 1.0);
  d.set(StringSeq{0, 1}, 2.0);
  const auto p = make_tabulated_problem(d);
  const auto v = check_string_matroid(p);
  ASSERT_TRUE(v.fails());
  EXPECT_TRUE(witness_replays(p, *v.witness));
}

TEST(StringMatroid, ExchangeAxiomFails) {
  TabulatedData<double> d;
  d.ground_size = 3;
  d.horizon = 2;
  d.set(StringSeq{0}, 1.0);
  d.set(StringSeq{1}, 1.0);
  d.set(StringSeq{1, 2}, 2.0);
  const auto p = make_tabulated_problem(d);
  const auto v = check_string_matroid(p);
  ASSERT_TRUE(v.fails());
  EXPECT_NE(v.witness->description.find("exchange"), std::string::npos);
  EXPECT_TRUE(witness_replays(p, *v.witness));
}

TEST(Superiority, T1Chain) {
  const auto p = make_tabulated_problem(testing::t1_table<Rational>());
  const auto rep = verify_superiority(p);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(*rep.bounds.ratio, q(1));
  EXPECT_EQ(rep.bounds.beta2, q(4, 5));
  EXPECT_EQ(*rep.bounds.beta1_G, q(3, 4));
  for (const auto& leg : rep.legs) EXPECT_TRUE(leg.applicable) << leg.name;
}

TEST(Superiority, CounterexampleChain) {
  const auto rep = verify_superiority(build_counterexample());
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(*rep.bounds.ratio, q(1));
  EXPECT_FALSE(rep.find(kLegBeta1Gpp)->applicable);
  EXPECT_EQ(rep.find(kLegCombinedG)->rhs, q(199, 351));
  EXPECT_EQ(rep.find(kLegMidG)->lhs, q(22));
}

TEST(Superiority, SetSuiteSampleHasNoViolations) {
  SuiteConfig config;
  config.instances = 200;
  const auto s = run_superiority_suite(config);
  EXPECT_TRUE(s.ok());
  EXPECT_GT(s.a1_a7, 0u);
}

// With repeats, the epoch maximiser s_i may be g_1 itself, which gamma_G''
// never looks at. The gamma_G'' leg can then fail even with A1..A7 verified.
TEST(Superiority, GammaGppLegCanFailWhenSymbolsRepeat) {
  SuiteConfig config;
  config.kind = SuiteKind::kString;
  std::size_t found = 0;
  for (std::size_t i = 0; i < 1000 && found == 0; ++i) {
    const auto p = make_tabulated_problem(suite_instance(config, i));
    VerifyOptions o;
    o.throw_on_violation = false;
    const auto rep = verify_superiority(p, o);
    const auto* leg = rep.find(kLegBeta1Gpp);
    if (!leg->applicable || leg->holds) continue;
    ++found;
    EXPECT_TRUE(rep.assumptions.holds_through(7));
    EXPECT_THROW(verify_superiority(p), ChainViolation);
    // Some later epoch maximiser repeats g_1.
    bool repeats_g1 = false;
    for (std::size_t k = 1; k < rep.trace.horizon(); ++k) {
      GreedyTrace<double> t = rep.trace;
      repeats_g1 = repeats_g1 || compute_Bs(p, t).maximizers[k] == rep.trace.choices[0];
    }
    EXPECT_TRUE(repeats_g1);
  }
  EXPECT_EQ(found, 1u);
}

}  // namespace
}  // namespace greedy_certify
