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

// Small hand-built instances shared by the test suites.

#pragma once

#include <cmath>
#include <memory>
#include <span>
#include <string>

#include "greedy_certify/problem.hpp"
#include "greedy_certify/tabulated.hpp"

namespace greedy_certify::testing {

inline std::string data_path(const std::string& name) {
  return std::string(GREEDY_CERTIFY_DATA_DIR) + "/" + name;
}

// Two symbols a, b: f(a) = 3, f(b) = 2, f(ab) = 4, K = 2, set semantics.
template <class V>
TabulatedData<V> t1_table() {
  TabulatedData<V> d;
  d.ground_size = 2;
  d.horizon = 2;
  d.permutation_invariant = true;
  d.repeat_allowed = false;
  d.symbol_names = {"a", "b"};
  d.set(StringSeq{}, V(0));
  d.set(StringSeq{0}, V(3));
  d.set(StringSeq{1}, V(2));
  d.set(StringSeq{0, 1}, V(4));
  return d;
}

// f(S) = sum of weights, every string of length <= K without repeats.
inline ProblemInstance<double> modular_problem(std::vector<double> weights, std::size_t horizon) {
  const std::size_t n = weights.size();
  auto f = make_objective<double>([w = std::move(weights)](std::span<const SymbolId> s) {
    double total = 0.0;
    for (SymbolId x : s) total += w[x];
    return total;
  });
  return ProblemInstance<double>(n, horizon, f, std::make_shared<UniformDomain>(n, horizon, false),
                                 ProblemTraits{true, false});
}

}  // namespace greedy_certify::testing
