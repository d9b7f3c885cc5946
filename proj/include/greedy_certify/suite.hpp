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

// Batch certification over seeded random tabulated instances. Instance i of
// master seed m is fully determined by (m, i).

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "greedy_certify/oracle.hpp"
#include "greedy_certify/parallel.hpp"
#include "greedy_certify/random_instances.hpp"
#include "greedy_certify/tabulated.hpp"

namespace greedy_certify {

enum class SuiteKind { kSet, kString };

inline std::string to_string(SuiteKind k) { return k == SuiteKind::kSet ? "set" : "string"; }

struct SuiteConfig {
  std::size_t instances = 1000;
  std::uint64_t seed = 2026;
  std::size_t max_ground = 6;
  std::size_t max_horizon = 4;
  SuiteKind kind = SuiteKind::kSet;
  VerifyOptions verify;
};

inline TabulatedData<double> suite_instance(const SuiteConfig& config, std::size_t index) {
  if (config.kind == SuiteKind::kSet) {
    CounterRng rng(seed_derive(config.seed, "spec", index));
    const SetInstanceSpec spec = random_set_spec(rng, config.max_ground, config.max_horizon);
    return random_set_instance(spec, seed_derive(config.seed, "instance", index));
  }
  CounterRng rng(seed_derive(config.seed, "string-spec", index));
  const std::size_t n = 2 + rng.below(config.max_ground - 1);
  const std::size_t k = 1 + rng.below(config.max_horizon);
  return random_string_instance(n, k, seed_derive(config.seed, "string-instance", index));
}

struct LegTally {
  std::size_t applicable = 0;
  std::size_t violations = 0;
};

struct SuiteViolation {
  std::size_t index = 0;
  std::string leg;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct SuiteSummary {
  std::size_t instances = 0;
  std::size_t a1_a2 = 0;
  std::size_t a1_a5 = 0;
  std::size_t a1_a7 = 0;
  std::map<std::string, LegTally> legs;
  std::vector<SuiteViolation> violations;

  bool ok() const { return violations.empty(); }
};

struct SuiteOutcome {
  bool a12 = false, a15 = false, a17 = false;
  std::vector<ChainLeg<double>> legs;
};

inline SuiteOutcome run_suite_instance(const SuiteConfig& config, std::size_t index) {
  VerifyOptions options = config.verify;
  options.throw_on_violation = false;
  const ProblemInstance<double> problem = make_tabulated_problem(suite_instance(config, index));
  const SuperiorityReport<double> rep = verify_superiority(problem, options);
  SuiteOutcome out;
  out.a12 = rep.assumptions.holds_through(2);
  out.a15 = rep.assumptions.holds_through(5);
  out.a17 = rep.assumptions.holds_through(7);
  out.legs = rep.legs;
  return out;
}

inline SuiteSummary run_superiority_suite(const SuiteConfig& config) {
  const auto outcomes = parallel_map(config.instances,
                                     [&](std::size_t i) { return run_suite_instance(config, i); });
  SuiteSummary s;
  s.instances = outcomes.size();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const SuiteOutcome& o = outcomes[i];
    s.a1_a2 += o.a12;
    s.a1_a5 += o.a15;
    s.a1_a7 += o.a17;
    for (const auto& leg : o.legs) {
      LegTally& t = s.legs[leg.name];
      if (!leg.applicable) continue;
      ++t.applicable;
      if (!leg.holds) {
        ++t.violations;
        s.violations.push_back({i, leg.name, leg.lhs, leg.rhs});
      }
    }
  }
  return s;
}

}  // namespace greedy_certify
