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

#pragma once

#include <cstddef>
#include <vector>

#include "greedy_certify/errors.hpp"
#include "greedy_certify/problem.hpp"
#include "greedy_certify/string_seq.hpp"

namespace greedy_certify {

// G_K = g_1 ... g_K together with f(G_i) and the increments
// Delta(G_i) = f(G_i) - f(G_{i-1}). Index i-1 in each vector holds epoch i.
template <class V>
struct GreedyTrace {
  StringSeq choices;
  V empty_value{};  // f(empty string)
  std::vector<V> values;
  std::vector<V> increments;
  std::vector<V> epoch_maxima;  // c_i; filled by compute_Bs

  std::size_t horizon() const { return choices.size(); }
  StringSeq prefix(std::size_t i) const { return choices.prefix(i); }
  const V& final_value() const { return values.back(); }
  const V& first_value() const { return values.front(); }
};

// Delta(s u) = f(s u) - f(s).
template <class V>
V increment(const ProblemInstance<V>& problem, const StringSeq& s, SymbolId u) {
  StringSeq su = s.extended(u);
  if (!problem.member(su)) {
    throw InfeasibleExtension("appending " + problem.describe(StringSeq{u}) + " to " +
                              problem.describe(s) + " leaves the feasible domain");
  }
  return problem.value(su) - problem.value(s);
}

// Runs all K epochs; at each one picks the feasible symbol maximising
// f(G_{k-1} s), smallest SymbolId on ties.
template <class V>
GreedyTrace<V> run_greedy(const ProblemInstance<V>& problem) {
  GreedyTrace<V> trace;
  trace.empty_value = problem.value(StringSeq{});
  V previous = trace.empty_value;
  for (std::size_t k = 1; k <= problem.horizon(); ++k) {
    const std::vector<SymbolId> candidates = problem.feasible_next(trace.choices);
    if (candidates.empty()) throw DeadEnd(k);
    const std::vector<V> values = problem.extension_values(trace.choices, candidates);
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
      if (values[i] > values[best]) best = i;
    }
    trace.choices.push_back(candidates[best]);
    trace.values.push_back(values[best]);
    trace.increments.push_back(values[best] - previous);
    previous = values[best];
  }
  return trace;
}

}  // namespace greedy_certify
