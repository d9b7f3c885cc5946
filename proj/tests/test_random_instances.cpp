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

#include "greedy_certify/random_instances.hpp"

#include <gtest/gtest.h>

#include "greedy_certify/oracle.hpp"

namespace greedy_certify {
namespace {

TEST(RandomInstances, SameSeedSameInstance) {
  const SetInstanceSpec spec{5, 3, SetFamily::kCoverage, SetDomain::kUniform};
  EXPECT_EQ(random_set_instance(spec, 11).values, random_set_instance(spec, 11).values);
  EXPECT_NE(random_set_instance(spec, 11).values, random_set_instance(spec, 12).values);
}

TEST(RandomInstances, StructuredFamiliesAreSubmodular) {
  for (auto family : {SetFamily::kCoverage, SetFamily::kConcaveModular}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto p = make_tabulated_problem(
          random_set_instance({6, 3, family, SetDomain::kFree}, seed));
      EXPECT_TRUE(check_set_submodular(p).holds()) << to_string(family) << " seed " << seed;
    }
  }
}

TEST(RandomInstances, MonotoneFamilyIsMonotone) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto p = make_tabulated_problem(
        random_set_instance({5, 3, SetFamily::kMonotone, SetDomain::kFree}, seed));
    auto trace = run_greedy(p);
    const auto opt = brute_force_optimal(p);
    EXPECT_TRUE(check_assumptions(p, trace, opt)[4].holds()) << seed;
  }
}

TEST(RandomInstances, DomainsAreMatroids) {
  for (auto domain : {SetDomain::kFree, SetDomain::kUniform, SetDomain::kPartition}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto p = make_tabulated_problem(
          random_set_instance({5, 2, SetFamily::kUnstructured, domain}, seed));
      EXPECT_TRUE(check_string_matroid(p).holds()) << to_string(domain) << " seed " << seed;
      EXPECT_NO_THROW(run_greedy(p));
    }
  }
}

TEST(RandomInstances, SpecWithinLimits) {
  CounterRng rng(3);
  for (int i = 0; i < 500; ++i) {
    const auto spec = random_set_spec(rng, 6, 4);
    EXPECT_GE(spec.ground_size, 2u);
    EXPECT_LE(spec.ground_size, 6u);
    EXPECT_GE(spec.horizon, 1u);
    EXPECT_LE(spec.horizon, std::min<std::size_t>(4, spec.ground_size));
  }
}

TEST(RandomInstances, StringInstanceIsForwardMonotone) {
  const auto p = make_tabulated_problem(random_string_instance(3, 3, 5));
  EXPECT_EQ(p.feasible_next(StringSeq{0, 0}), (std::vector<SymbolId>{0, 1, 2}));
  const auto v = check_string_submodular(p, 200, 1);
  // Forward monotone by construction; diminishing returns is not promised.
  if (v.fails()) {
    EXPECT_NE(v.witness->description.find("diminishing"), std::string::npos);
  }
}

}  // namespace
}  // namespace greedy_certify
