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

// A four-symbol set function on which the greedy curvature inequality
//
//   sum_k f(o_k) <= f(g_1) + 1/(1 - alpha) sum_{k>=2} Delta(G_k),
//   1/(1 - alpha) = max_{j not in G_{K-1}} f(j) / Delta(G_{K-1} j)
//
// fails, while the final bound f(O_K) <= right-hand side still holds.
// Everything here is exact rational arithmetic.
//
// Symbols w, x, y, z have ids 0..3. The domain is every set of size <= 3;
// f(wxyz) is tabulated as well, readable only by probes that append a fourth
// symbol (A7 and gamma_G'').

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "greedy_certify/bounds.hpp"
#include "greedy_certify/errors.hpp"
#include "greedy_certify/greedy.hpp"
#include "greedy_certify/oracle.hpp"
#include "greedy_certify/problem.hpp"
#include "greedy_certify/tabulated.hpp"
#include "greedy_certify/value.hpp"

namespace greedy_certify {

inline constexpr SymbolId kW = 0;
inline constexpr SymbolId kX = 1;
inline constexpr SymbolId kY = 2;
inline constexpr SymbolId kZ = 3;

inline Rational rational(std::int64_t p, std::int64_t q = 1) { return Rational(p) / Rational(q); }

inline TabulatedData<Rational> counterexample_table() {
  TabulatedData<Rational> d;
  d.ground_size = 4;
  d.horizon = 3;
  d.permutation_invariant = true;
  d.repeat_allowed = false;
  d.max_length = 3;
  d.symbol_names = {"w", "x", "y", "z"};
  d.set(StringSeq{}, rational(0));
  d.set(StringSeq{kW}, rational(1, 3));
  d.set(StringSeq{kX}, rational(9));
  d.set(StringSeq{kY}, rational(10));
  d.set(StringSeq{kZ}, rational(1, 2));
  d.set(StringSeq{kW, kX}, rational(28, 3));
  d.set(StringSeq{kW, kY}, rational(31, 3));
  d.set(StringSeq{kW, kZ}, rational(5, 6));
  d.set(StringSeq{kX, kY}, rational(11));
  d.set(StringSeq{kX, kZ}, rational(19, 2));
  d.set(StringSeq{kY, kZ}, rational(21, 2));
  d.set(StringSeq{kW, kX, kY}, rational(67, 6));
  d.set(StringSeq{kW, kX, kZ}, rational(59, 6));
  d.set(StringSeq{kW, kY, kZ}, rational(65, 6));
  d.set(StringSeq{kX, kY, kZ}, rational(34, 3));
  d.set(StringSeq{kW, kX, kY, kZ}, rational(34, 3));
  return d;
}

inline ProblemInstance<Rational> build_counterexample() {
  return make_tabulated_problem(counterexample_table());
}

// max over j outside G_{K-1} of f(j) / Delta(G_{K-1} j).
inline Rational alpha_G_prime_gamma(const ProblemInstance<Rational>& problem,
                                    const GreedyTrace<Rational>& trace) {
  if (trace.horizon() < 2) throw std::invalid_argument("needs K >= 2");
  const StringSeq base = trace.prefix(trace.horizon() - 1);
  const auto used = components(base);
  std::optional<Rational> best;
  for (SymbolId j = 0; j < problem.ground_size(); ++j) {
    if (used.count(j)) continue;
    const Rational delta = increment(problem, base, j);
    if (delta == 0) {
      throw ZeroIncrement("Delta(" + problem.describe(base.extended(j)) + ") = 0");
    }
    const Rational ratio = problem.value(StringSeq{j}) / delta;
    if (!best || ratio > *best) best = ratio;
  }
  if (!best) throw EmptyCandidateSet(trace.horizon());
  return *best;
}

struct ReproductionCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct CounterexampleReport {
  std::vector<ReproductionCheck> checks;
  GreedyTrace<Rational> trace;
  OptResult<Rational> opt;
  Rational alpha_gamma;
  Rational lhs;  // sum_k f(o_k)
  Rational rhs;  // f(g_1) + alpha_gamma sum_{k>=2} Delta(G_k)

  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }

  // Throws ReproductionMismatch naming the first failed check.
  void require() const {
    for (const auto& c : checks) {
      if (!c.passed) {
        throw ReproductionMismatch(c.name + ": expected " + c.expected + ", got " + c.actual);
      }
    }
  }
};

// Six checks. (i)-(iv) compare against the published constants; (v) and (vi)
// are recomputed from the instance, so an edited table can flip them.
inline CounterexampleReport verify_counterexample(const ProblemInstance<Rational>& problem) {
  using T = ValueTraits<Rational>;
  CounterexampleReport rep;
  auto add = [&](std::string name, std::string expected, std::string actual, bool ok) {
    rep.checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
  };

  const Verdict<Rational> sub = check_set_submodular(problem);
  add("(i) set submodularity", "holds",
      sub.holds() ? "holds" : "fails: " + sub.witness->description, sub.holds());

  rep.trace = run_greedy(problem);
  rep.opt = brute_force_optimal(problem);
  const StringSeq xyz{kX, kY, kZ};
  const auto greedy_set = components(rep.trace.choices);
  const auto opt_set = components(rep.opt.best);
  const bool same = greedy_set == components(xyz) && opt_set == components(xyz) &&
                    rep.trace.final_value() == rational(34, 3) && rep.opt.value == rational(34, 3);
  add("(ii) greedy = optimal = {x, y, z}", "{x, y, z} with f = 34/3",
      problem.describe(rep.trace.choices) + " f = " + T::format(rep.trace.final_value()) +
          "; optimum " + problem.describe(rep.opt.best) + " f = " + T::format(rep.opt.value),
      same);

  rep.lhs = 0;
  for (SymbolId o : rep.opt.best) rep.lhs += problem.value(StringSeq{o});
  add("(iii) sum_k f(o_k)", "39/2", T::format(rep.lhs), rep.lhs == rational(39, 2));

  rep.alpha_gamma = alpha_G_prime_gamma(problem, rep.trace);
  Rational tail = 0;
  for (std::size_t k = 1; k < rep.trace.horizon(); ++k) tail += rep.trace.increments[k];
  rep.rhs = rep.trace.first_value() + rep.alpha_gamma * tail;
  add("(iv) f(g_1) + 1/(1 - alpha) sum Delta(G_k)", "38/3 with 1/(1 - alpha) = 2",
      T::format(rep.rhs) + " with 1/(1 - alpha) = " + T::format(rep.alpha_gamma),
      rep.rhs == rational(38, 3) && rep.alpha_gamma == 2);

  add("(v) inequality fails: sum_k f(o_k) > right-hand side", "true",
      T::format(rep.lhs) + (rep.lhs > rep.rhs ? " > " : " <= ") + T::format(rep.rhs),
      rep.lhs > rep.rhs);

  add("(vi) f(O_K) <= right-hand side", "true",
      T::format(rep.opt.value) + (rep.opt.value <= rep.rhs ? " <= " : " > ") + T::format(rep.rhs),
      rep.opt.value <= rep.rhs);
  return rep;
}

}  // namespace greedy_certify
