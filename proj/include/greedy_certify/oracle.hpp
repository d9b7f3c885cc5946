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

// Ground truth for small instances: exhaustive optimum, assumption checks
// A1..A7 with replayable witnesses, set/string submodularity and string
// matroid checkers, and the full certification chain
//
//   f(G_K)/f(O_K) >= f(G_K)/B_s >= 1/K + (1/gamma)(K-1)/K.
//
// A failed check is a verdict, not an error. Sampled checks are flagged as
// sampled and never reported as exhaustive.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "greedy_certify/bounds.hpp"
#include "greedy_certify/errors.hpp"
#include "greedy_certify/greedy.hpp"
#include "greedy_certify/problem.hpp"
#include "greedy_certify/seed.hpp"
#include "greedy_certify/string_seq.hpp"
#include "greedy_certify/value.hpp"

namespace greedy_certify {

enum class CheckStatus { kHolds, kFails, kUnchecked };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kHolds: return "holds";
    case CheckStatus::kFails: return "fails";
    case CheckStatus::kUnchecked: return "unchecked";
  }
  return "?";
}

// How the witness expression violates its inequality.
enum class Relation {
  kPositive,     // violation: expression > 0
  kNotPositive,  // violation: expression <= 0
  kNonzero,      // violation: expression != 0
};

// A concrete, replayable counterexample: the linear expression
// sum_i coeff_i * f(seq_i) together with membership facts about T.
template <class V>
struct Witness {
  std::string description;
  std::vector<std::pair<int, StringSeq>> terms;
  Relation relation = Relation::kPositive;
  V expression{};
  std::vector<std::pair<StringSeq, bool>> membership;  // (seq, observed member())
};

template <class V>
struct Verdict {
  CheckStatus status = CheckStatus::kUnchecked;
  bool sampled = false;
  std::size_t checked = 0;  // inequalities or facts examined
  std::optional<Witness<V>> witness;
  std::string note;

  bool holds() const { return status == CheckStatus::kHolds; }
  bool fails() const { return status == CheckStatus::kFails; }

  std::string label() const {
    std::string s = to_string(status);
    if (sampled && status == CheckStatus::kHolds) s += " (sampled)";
    return s;
  }
};

template <class V>
bool relation_violated(Relation r, const V& expr) {
  using T = ValueTraits<V>;
  switch (r) {
    case Relation::kPositive: return !T::leq(expr, T::from_int(0));
    case Relation::kNotPositive: return !T::is_positive(expr);
    case Relation::kNonzero: return !T::is_zero(expr);
  }
  return false;
}

template <class V>
Witness<V> make_witness(const ProblemInstance<V>& problem, std::string description,
                        std::vector<std::pair<int, StringSeq>> terms, Relation relation) {
  Witness<V> w;
  w.description = std::move(description);
  w.relation = relation;
  w.expression = ValueTraits<V>::from_int(0);
  for (const auto& [coeff, seq] : terms) {
    w.expression = w.expression + ValueTraits<V>::from_int(coeff) * problem.value(seq);
  }
  w.terms = std::move(terms);
  return w;
}

// Re-evaluates the witness from scratch and confirms the violation.
template <class V>
bool witness_replays(const ProblemInstance<V>& problem, const Witness<V>& w) {
  for (const auto& [seq, observed] : w.membership) {
    if (problem.member(seq) != observed) return false;
  }
  if (w.terms.empty()) return !w.membership.empty();
  V expr = ValueTraits<V>::from_int(0);
  for (const auto& [coeff, seq] : w.terms) {
    expr = expr + ValueTraits<V>::from_int(coeff) * problem.evaluate_uncached(seq.view());
  }
  return expr == w.expression && relation_violated(w.relation, expr);
}

template <class V>
Verdict<V> failed(Witness<V> w, std::size_t checked, bool sampled = false) {
  Verdict<V> v;
  v.status = CheckStatus::kFails;
  v.sampled = sampled;
  v.checked = checked;
  v.witness = std::move(w);
  return v;
}

template <class V>
Verdict<V> passed(std::size_t checked, bool sampled = false, std::string note = {}) {
  Verdict<V> v;
  v.status = CheckStatus::kHolds;
  v.sampled = sampled;
  v.checked = checked;
  v.note = std::move(note);
  return v;
}

template <class V>
Verdict<V> unchecked(std::string note) {
  Verdict<V> v;
  v.note = std::move(note);
  return v;
}

// --------------------------------------------------------------------------
// Exhaustive search

struct VerifyOptions {
  EnumerationGuard guard;
  std::size_t search_cap = 10'000'000;      // brute-force strings
  std::size_t enumeration_cap = 1'000'000;  // domain enumeration for A4 etc.
  std::size_t samples = 1000;               // fallback sample count
  std::uint64_t seed = 0x5eedULL;
  double chain_tolerance = 1e-9;            // ignored for exact values
  bool throw_on_violation = true;
};

// Depth-first walk over every member of T reachable through member prefixes,
// up to `max_length`, in lexicographic order. visit(seq, f(seq)) returns
// false to stop. Returns false when more than `cap` strings would be visited.
template <class V, class Visit>
bool enumerate_domain(const ProblemInstance<V>& problem, std::size_t max_length, std::size_t cap,
                      Visit&& visit) {
  std::size_t visited = 0;
  bool stop = false;
  StringSeq current;
  auto recurse = [&](auto& self, const V& value) -> bool {
    if (++visited > cap) return false;
    if (!visit(current, value)) {
      stop = true;
      return true;
    }
    if (current.size() >= max_length) return true;
    const std::vector<SymbolId> next = problem.feasible_next(current);
    if (next.empty()) return true;
    std::vector<V> values(next.size());
    problem.extension_values_uncached(current.view(), next, values);
    for (std::size_t i = 0; i < next.size() && !stop; ++i) {
      current.push_back(next[i]);
      const bool ok = self(self, values[i]);
      current.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return recurse(recurse, problem.evaluate_uncached(current.view()));
}

template <class V>
std::size_t domain_length_limit(const ProblemInstance<V>& problem) {
  return problem.feasibility().max_length().value_or(problem.horizon());
}

template <class V>
struct OptResult {
  StringSeq best;
  V value{};
  std::size_t explored = 0;
  // Every string whose value ties the optimum (within tolerance), in
  // lexicographic order; truncated at `max_optima`.
  std::vector<StringSeq> optima;
  bool optima_truncated = false;
};

// Exact maximiser of f over feasible strings of length <= K, so a shorter
// optimum is found too. Ties go to the lexicographically smallest string.
template <class V>
OptResult<V> brute_force_optimal(const ProblemInstance<V>& problem,
                                 std::size_t cap = 10'000'000, std::size_t max_optima = 256) {
  using T = ValueTraits<V>;
  OptResult<V> out;
  bool have = false;
  auto visit = [&](const StringSeq& seq, const V& value) {
    ++out.explored;
    if (!have || (value > out.value && !T::equal(value, out.value))) {
      have = true;
      out.best = seq;
      out.value = value;
      out.optima.assign(1, seq);
      out.optima_truncated = false;
    } else if (T::equal(value, out.value)) {
      if (out.optima.size() < max_optima) {
        out.optima.push_back(seq);
      } else {
        out.optima_truncated = true;
      }
    }
    return true;
  };
  if (!enumerate_domain(problem, problem.horizon(), cap, visit)) {
    throw SearchSpaceTooLarge("more than " + std::to_string(cap) +
                              " feasible strings of length <= " +
                              std::to_string(problem.horizon()));
  }
  return out;
}

// --------------------------------------------------------------------------
// Assumptions A1..A7

template <class V>
struct AssumptionReport {
  std::array<Verdict<V>, 7> a;  // a[0] is A1
  Verdict<V> set_submodular;
  Verdict<V> string_submodular;
  Verdict<V> matroid;
  // Optimum ordering used for A1/A2 (a reordering of the brute-force optimum
  // for permutation-invariant problems).
  StringSeq optimum_ordering;
  bool any_optimum_satisfies_a1 = false;

  const Verdict<V>& operator[](std::size_t one_based) const { return a[one_based - 1]; }
  bool holds_through(std::size_t last) const {
    for (std::size_t i = 0; i < last; ++i) {
      if (!a[i].holds()) return false;
    }
    return true;
  }
};

namespace detail {

// Kuhn's augmenting-path matching: positions i (epoch i) to optimum entries.
inline bool augment(std::size_t pos, const std::vector<std::vector<bool>>& edge,
                    std::vector<bool>& seen, std::vector<int>& entry_of_pos,
                    std::vector<int>& pos_of_entry) {
  for (std::size_t e = 0; e < edge[pos].size(); ++e) {
    if (!edge[pos][e] || seen[e]) continue;
    seen[e] = true;
    if (pos_of_entry[e] < 0 ||
        augment(static_cast<std::size_t>(pos_of_entry[e]), edge, seen, entry_of_pos,
                pos_of_entry)) {
      pos_of_entry[e] = static_cast<int>(pos);
      entry_of_pos[pos] = static_cast<int>(e);
      return true;
    }
  }
  return false;
}

}  // namespace detail

// o_i in S(G_{i-1}) ∩ S(empty) for every i. For permutation-invariant
// problems any reordering of the optimum is an equally good optimum, so the
// check succeeds if some ordering qualifies. Returns that ordering.
template <class V>
std::optional<StringSeq> a1_ordering(const ProblemInstance<V>& problem,
                                     const GreedyTrace<V>& trace, const StringSeq& opt) {
  const std::size_t len = opt.size();
  if (len > trace.horizon()) return std::nullopt;
  std::vector<bool> single_ok(problem.ground_size(), false);
  for (SymbolId s : problem.feasible_next(StringSeq{})) single_ok[s] = true;
  std::vector<std::vector<bool>> next_ok(len, std::vector<bool>(problem.ground_size(), false));
  for (std::size_t i = 0; i < len; ++i) {
    for (SymbolId s : problem.feasible_next(trace.prefix(i))) next_ok[i][s] = true;
  }
  auto ok = [&](std::size_t pos, SymbolId s) { return single_ok[s] && next_ok[pos][s]; };

  if (!problem.permutation_invariant()) {
    for (std::size_t i = 0; i < len; ++i) {
      if (!ok(i, opt[i])) return std::nullopt;
    }
    return opt;
  }
  std::vector<std::vector<bool>> edge(len, std::vector<bool>(len, false));
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t e = 0; e < len; ++e) edge[i][e] = ok(i, opt[e]);
  }
  std::vector<int> entry_of_pos(len, -1), pos_of_entry(len, -1);
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<bool> seen(len, false);
    if (!detail::augment(i, edge, seen, entry_of_pos, pos_of_entry)) return std::nullopt;
  }
  StringSeq ordered;
  for (std::size_t i = 0; i < len; ++i) ordered.push_back(opt[entry_of_pos[i]]);
  return ordered;
}

template <class V>
Verdict<V> check_a1(const ProblemInstance<V>& problem, const GreedyTrace<V>& trace,
                    const StringSeq& opt, StringSeq& ordering_out) {
  if (auto ordering = a1_ordering(problem, trace, opt)) {
    ordering_out = *ordering;
    return passed<V>(opt.size(), false,
                     problem.permutation_invariant() && *ordering != opt
                         ? "optimum reordered as " + problem.describe(*ordering)
                         : std::string{});
  }
  ordering_out = opt;
  // Witness: the first position of the reported ordering that is infeasible.
  for (std::size_t i = 0; i < opt.size(); ++i) {
    const StringSeq single{opt[i]};
    const StringSeq after = trace.prefix(i).extended(opt[i]);
    const bool single_member = problem.member(single);
    const bool after_member = problem.member(after);
    if (single_member && after_member) continue;
    Witness<V> w;
    w.description = "o_" + std::to_string(i + 1) + " = " + problem.describe(single) +
                    " is not in S(G_" + std::to_string(i) + ") ∩ S(empty)" +
                    (problem.permutation_invariant() ? "; no reordering of the optimum works"
                                                     : "");
    w.membership = {{single, single_member}, {after, after_member}};
    return failed(std::move(w), opt.size());
  }
  // Every position is individually fine but no perfect matching exists.
  Witness<V> w;
  w.description = "no ordering of the optimum " + problem.describe(opt) +
                  " places each o_i in S(G_{i-1}) ∩ S(empty)";
  for (std::size_t i = 0; i < opt.size(); ++i) {
    for (std::size_t e = 0; e < opt.size(); ++e) {
      const StringSeq after = trace.prefix(i).extended(opt[e]);
      w.membership.emplace_back(after, problem.member(after));
    }
  }
  return failed(std::move(w), opt.size());
}

// M_T(S \ u) for every u, or nullopt entries where it does not exist.
template <class V>
std::vector<std::optional<StringSeq>> best_completions(const ProblemInstance<V>& problem,
                                                       const EnumerationGuard& guard) {
  std::vector<std::optional<StringSeq>> out(problem.ground_size());
  for (SymbolId u = 0; u < problem.ground_size(); ++u) {
    out[u] = best_completion_without(problem, u, guard.max_ground);
  }
  return out;
}

template <class V>
AssumptionReport<V> check_assumptions(const ProblemInstance<V>& problem,
                                      const GreedyTrace<V>& trace, const OptResult<V>& opt,
                                      const VerifyOptions& options = {}) {
  using T = ValueTraits<V>;
  AssumptionReport<V> r;
  const std::size_t K = trace.horizon();

  // A1
  r.a[0] = check_a1(problem, trace, opt.best, r.optimum_ordering);
  r.any_optimum_satisfies_a1 = r.a[0].holds();
  for (std::size_t i = 0; i < opt.optima.size() && !r.any_optimum_satisfies_a1; ++i) {
    r.any_optimum_satisfies_a1 = a1_ordering(problem, trace, opt.optima[i]).has_value();
  }

  // A2: f(O) <= sum f(o_i)
  {
    std::vector<std::pair<int, StringSeq>> terms{{1, opt.best}};
    for (SymbolId o : opt.best) terms.emplace_back(-1, StringSeq{o});
    bool singles_defined = true;
    for (SymbolId o : opt.best) singles_defined = singles_defined && problem.defined(StringSeq{o});
    if (!singles_defined) {
      r.a[1] = unchecked<V>("some f(o_i) is undefined");
    } else {
      Witness<V> w = make_witness(problem, "f(O_K) > sum_i f(o_i)", std::move(terms),
                                  Relation::kPositive);
      r.a[1] = relation_violated(w.relation, w.expression) ? failed(std::move(w), 1)
                                                           : passed<V>(1);
    }
  }

  // A3
  {
    Witness<V> w = make_witness(problem, "f(empty) != 0", {{1, StringSeq{}}}, Relation::kNonzero);
    r.a[2] = relation_violated(w.relation, w.expression) ? failed(std::move(w), 1) : passed<V>(1);
  }

  // A4: consecutive prefix pairs cover every P ≼ S by transitivity.
  {
    std::size_t checked = 0;
    std::optional<Witness<V>> bad;
    const std::size_t limit = domain_length_limit(problem);
    auto visit = [&](const StringSeq& seq, const V& value) {
      if (!seq.empty()) {
        ++checked;
        const StringSeq parent = seq.prefix(seq.size() - 1);
        const V parent_value = problem.evaluate_uncached(parent.view());
        if (!T::leq(parent_value, value)) {
          bad = make_witness(problem, "f(P) > f(S) for P ≼ S",
                             {{1, parent}, {-1, seq}}, Relation::kPositive);
          return false;
        }
      }
      return true;
    };
    const bool complete = enumerate_domain(problem, limit, options.enumeration_cap, visit);
    if (bad) {
      r.a[3] = failed(std::move(*bad), checked);
    } else if (complete) {
      r.a[3] = passed<V>(checked);
    } else {
      // Sampled random walks through the domain.
      CounterRng rng(seed_derive(options.seed, "A4"));
      std::size_t sampled = 0;
      for (std::size_t t = 0; t < options.samples && !bad; ++t) {
        StringSeq walk;
        V prev = problem.value(walk);
        while (walk.size() < limit) {
          const auto next = problem.feasible_next(walk);
          if (next.empty()) break;
          walk.push_back(next[rng.below(next.size())]);
          const V cur = problem.value(walk);
          ++sampled;
          if (!T::leq(prev, cur)) {
            bad = make_witness(problem, "f(P) > f(S) for P ≼ S",
                               {{1, walk.prefix(walk.size() - 1)}, {-1, walk}},
                               Relation::kPositive);
            break;
          }
          prev = cur;
        }
      }
      r.a[3] = bad ? failed(std::move(*bad), sampled, true) : passed<V>(sampled, true);
    }
  }

  // A5: Delta(G_i s) > 0 for i in 1..K-1, s in S(G_i)
  {
    std::size_t checked = 0;
    std::optional<Witness<V>> bad;
    for (std::size_t i = 1; i < K && !bad; ++i) {
      const StringSeq base = trace.prefix(i);
      const auto next = problem.feasible_next(base);
      const auto values = problem.extension_values(base, next);
      for (std::size_t j = 0; j < next.size(); ++j) {
        ++checked;
        if (!T::is_positive(values[j] - trace.values[i - 1])) {
          bad = make_witness(problem, "Delta(G_i s) <= 0",
                             {{1, base.extended(next[j])}, {-1, base}}, Relation::kNotPositive);
          break;
        }
      }
    }
    r.a[4] = bad ? failed(std::move(*bad), checked) : passed<V>(checked);
  }

  // A6, A7 need M_T(S \ u) for every u.
  if (!guard_allows(options.guard, problem.ground_size(), problem.horizon())) {
    r.a[5] = unchecked<V>("M_T enumeration above guard");
    r.a[6] = unchecked<V>("M_T enumeration above guard");
    return r;
  }
  const auto completions = best_completions(problem, options.guard);
  std::string missing;
  for (SymbolId u = 0; u < problem.ground_size(); ++u) {
    if (!completions[u]) {
      missing = "sigma_T(S \\ " + problem.describe(StringSeq{u}) + ") is empty";
      break;
    }
    if (!problem.defined(completions[u]->extended(u))) {
      missing = "f undefined at " + problem.describe(completions[u]->extended(u));
      break;
    }
  }
  if (!missing.empty()) {
    r.a[5] = unchecked<V>(missing);
    r.a[6] = unchecked<V>(missing);
    return r;
  }
  auto delta_m = [&](SymbolId u) {
    return problem.value(completions[u]->extended(u)) - problem.value(*completions[u]);
  };

  {
    std::size_t checked = 0;
    std::optional<Witness<V>> bad;
    for (std::size_t i = 1; i <= K && !bad; ++i) {
      const StringSeq base = trace.prefix(i);
      for (SymbolId u : problem.feasible_next(base)) {
        ++checked;
        const V lhs = problem.value(base.extended(u)) - trace.values[i - 1];
        if (!T::leq(delta_m(u), lhs)) {
          const StringSeq& m = *completions[u];
          bad = make_witness(problem, "Delta(G_i u) < Delta(M_T(S \\ u) u)",
                             {{1, m.extended(u)}, {-1, m}, {-1, base.extended(u)}, {1, base}},
                             Relation::kPositive);
          break;
        }
      }
    }
    r.a[5] = bad ? failed(std::move(*bad), checked) : passed<V>(checked);
  }

  {
    std::optional<Witness<V>> bad;
    for (SymbolId u = 0; u < problem.ground_size(); ++u) {
      if (!T::is_positive(delta_m(u))) {
        const StringSeq& m = *completions[u];
        bad = make_witness(problem,
                           "Delta(M_T(S \\ u) u) <= 0 for u = " + problem.describe(StringSeq{u}),
                           {{1, m.extended(u)}, {-1, m}}, Relation::kNotPositive);
        break;
      }
    }
    r.a[6] = bad ? failed(std::move(*bad), problem.ground_size()) : passed<V>(problem.ground_size());
  }
  return r;
}

// --------------------------------------------------------------------------
// Structure checkers

// Nondecreasing and diminishing returns over every pair of nested sets on
// which f is defined (including sets beyond the feasible rank, so a table's
// post-horizon entries are covered).
template <class V>
Verdict<V> check_set_submodular(const ProblemInstance<V>& problem) {
  using T = ValueTraits<V>;
  if (!problem.permutation_invariant() || problem.repeat_allowed()) {
    throw NotASetProblem("set submodularity needs a permutation-invariant problem without repeats");
  }
  const std::size_t n = problem.ground_size();
  if (n > 12) throw SearchSpaceTooLarge("set check limited to 12 symbols");
  const std::uint32_t full = 1u << n;
  auto seq_of = [](std::uint32_t m) {
    StringSeq s;
    for (SymbolId i = 0; m >> i; ++i) {
      if (m >> i & 1u) s.push_back(i);
    }
    return s;
  };
  std::vector<bool> has(full, false);
  std::vector<V> f(full);
  for (std::uint32_t m = 0; m < full; ++m) {
    const StringSeq s = seq_of(m);
    if (problem.defined(s)) {
      has[m] = true;
      f[m] = problem.value(s);
    }
  }
  std::size_t checked = 0;
  for (std::uint32_t b = 0; b < full; ++b) {
    if (!has[b]) continue;
    // Every submask a of b, including b itself and the empty set.
    for (std::uint32_t a = b;; a = (a - 1) & b) {
      if (has[a]) {
        ++checked;
        if (!T::leq(f[a], f[b])) {
          return failed(make_witness(problem, "f(A) > f(B) for A ⊆ B",
                                     {{1, seq_of(a)}, {-1, seq_of(b)}}, Relation::kPositive),
                        checked);
        }
        for (SymbolId x = 0; x < n; ++x) {
          const std::uint32_t bit = 1u << x;
          if (b & bit) continue;
          if (!has[a | bit] || !has[b | bit]) continue;
          ++checked;
          const V gain_a = f[a | bit] - f[a];
          const V gain_b = f[b | bit] - f[b];
          if (!T::leq(gain_b, gain_a)) {
            return failed(
                make_witness(problem, "f(B ∪ a) - f(B) > f(A ∪ a) - f(A) for A ⊆ B",
                             {{1, seq_of(b | bit)}, {-1, seq_of(b)}, {-1, seq_of(a | bit)},
                              {1, seq_of(a)}},
                             Relation::kPositive),
                checked);
          }
        }
      }
      if (a == 0) break;
    }
  }
  return passed<V>(checked);
}

namespace detail {

template <class V>
std::optional<Witness<V>> string_pair_violation(const ProblemInstance<V>& problem,
                                                const StringSeq& a, const StringSeq& b,
                                                std::span<const SymbolId> extensions,
                                                std::size_t& checked) {
  using T = ValueTraits<V>;
  ++checked;
  const V fa = problem.value(a);
  const V fb = problem.value(b);
  if (!T::leq(fa, fb)) {
    return make_witness(problem, "forward monotonicity: f(A) > f(B) for A ≼ B",
                        {{1, a}, {-1, b}}, Relation::kPositive);
  }
  for (SymbolId x : extensions) {
    ++checked;
    const V gain_a = problem.value(a.extended(x)) - fa;
    const V gain_b = problem.value(b.extended(x)) - fb;
    if (!T::leq(gain_b, gain_a)) {
      return make_witness(problem, "diminishing returns: f(Ba) - f(B) > f(Aa) - f(A) for A ≼ B",
                          {{1, b.extended(x)}, {-1, b}, {-1, a.extended(x)}, {1, a}},
                          Relation::kPositive);
    }
  }
  return std::nullopt;
}

inline std::vector<SymbolId> intersect_sorted(const std::vector<SymbolId>& x,
                                              const std::vector<SymbolId>& y) {
  std::vector<SymbolId> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

}  // namespace detail

// Forward monotone + diminishing returns over prefix pairs A ≼ B in T.
// Exhaustive when the domain has at most `exhaustive_cap` strings, otherwise
// `samples` random pairs (the verdict is then flagged sampled).
template <class V>
Verdict<V> check_string_submodular(const ProblemInstance<V>& problem, std::size_t samples,
                                   std::uint64_t seed = 0x5eedULL,
                                   std::size_t exhaustive_cap = 20'000) {
  const std::size_t limit = domain_length_limit(problem);
  std::vector<StringSeq> all;
  const bool enumerable = enumerate_domain(problem, limit, exhaustive_cap,
                                           [&](const StringSeq& s, const V&) {
                                             all.push_back(s);
                                             return true;
                                           });
  std::size_t checked = 0;
  if (enumerable) {
    for (const StringSeq& b : all) {
      const auto next_b = problem.feasible_next(b);
      for (std::size_t len = 0; len <= b.size(); ++len) {
        const StringSeq a = b.prefix(len);
        const auto ext = detail::intersect_sorted(problem.feasible_next(a), next_b);
        if (auto w = detail::string_pair_violation(problem, a, b, ext, checked)) {
          return failed(std::move(*w), checked);
        }
      }
    }
    return passed<V>(checked);
  }

  CounterRng rng(seed_derive(seed, "string-submodular"));
  std::size_t done = 0;
  const std::size_t max_attempts = samples * 20 + 100;
  for (std::size_t attempt = 0; done < samples && attempt < max_attempts; ++attempt) {
    // B: random walk of random length < limit so that B a can still be feasible.
    const std::size_t target = limit == 0 ? 0 : rng.below(limit);
    StringSeq b;
    while (b.size() < target) {
      const auto next = problem.feasible_next(b);
      if (next.empty()) break;
      b.push_back(next[rng.below(next.size())]);
    }
    const StringSeq a = b.prefix(rng.below(b.size() + 1));
    const auto ext = detail::intersect_sorted(problem.feasible_next(a), problem.feasible_next(b));
    if (ext.empty()) continue;
    const SymbolId x = ext[rng.below(ext.size())];
    const SymbolId one[] = {x};
    if (auto w = detail::string_pair_violation(problem, a, b, std::span<const SymbolId>(one),
                                               checked)) {
      return failed(std::move(*w), checked, true);
    }
    ++done;
  }
  Verdict<V> v = passed<V>(checked, true, std::to_string(done) + " sampled pairs");
  if (done < samples) {
    v.status = CheckStatus::kUnchecked;
    v.note = "only " + std::to_string(done) + " of " + std::to_string(samples) +
             " sample pairs had a common feasible extension";
  }
  return v;
}

// String matroid of finite rank `rank` (defaults to the domain's longest
// member, or the horizon): rank bound, prefix closure, and the exchange
// axiom over all strings of length <= rank + 1.
template <class V>
Verdict<V> check_string_matroid(const ProblemInstance<V>& problem,
                                std::optional<std::size_t> rank = std::nullopt,
                                std::size_t cap = 10'000'000) {
  const std::size_t r = rank.value_or(domain_length_limit(problem));
  const std::size_t n = problem.ground_size();
  double total = 0;
  double layer = 1;
  for (std::size_t len = 0; len <= r + 1; ++len) {
    total += layer;
    layer *= static_cast<double>(n);
  }
  if (total > static_cast<double>(cap)) {
    throw SearchSpaceTooLarge("string matroid check needs " + std::to_string(total) + " strings");
  }
  // members[len] lists the members of that length, lexicographic.
  std::vector<std::vector<StringSeq>> members(r + 2);
  std::size_t checked = 0;
  StringSeq current;
  std::optional<Witness<V>> bad;
  auto recurse = [&](auto& self) -> void {
    if (bad) return;
    ++checked;
    if (problem.member(current)) {
      if (current.size() > r) {
        Witness<V> w;
        w.description = "member longer than rank " + std::to_string(r);
        w.membership = {{current, true}};
        bad = std::move(w);
        return;
      }
      if (!current.empty()) {
        const StringSeq parent = current.prefix(current.size() - 1);
        if (!problem.member(parent)) {
          Witness<V> w;
          w.description = "prefix of a member is not a member";
          w.membership = {{current, true}, {parent, false}};
          bad = std::move(w);
          return;
        }
      }
      members[current.size()].push_back(current);
    }
    if (current.size() > r) return;
    for (SymbolId s = 0; s < n; ++s) {
      current.push_back(s);
      self(self);
      current.pop_back();
    }
  };
  recurse(recurse);
  if (bad) return failed(std::move(*bad), checked);

  for (std::size_t len = 0; len < r; ++len) {
    for (const StringSeq& a : members[len]) {
      for (const StringSeq& b : members[len + 1]) {
        ++checked;
        bool found = false;
        for (SymbolId c : components(b)) {
          if (problem.member(a.extended(c))) {
            found = true;
            break;
          }
        }
        if (!found) {
          Witness<V> w;
          w.description = "exchange axiom: no a in C(B) with A a in T";
          w.membership = {{a, true}, {b, true}};
          for (SymbolId c : components(b)) w.membership.emplace_back(a.extended(c), false);
          return failed(std::move(w), checked);
        }
      }
    }
  }
  return passed<V>(checked);
}

// --------------------------------------------------------------------------
// Certification chain

template <class V>
struct ChainLeg {
  std::string name;
  bool applicable = false;
  bool holds = true;
  V lhs{};
  V rhs{};  // the leg asserts lhs >= rhs
  std::string requires_;
};

template <class V>
struct SuperiorityReport {
  GreedyTrace<V> trace;
  BoundReport<V> bounds;
  OptResult<V> opt;
  AssumptionReport<V> assumptions;
  std::vector<ChainLeg<V>> legs;

  bool ok() const {
    for (const auto& leg : legs) {
      if (leg.applicable && !leg.holds) return false;
    }
    return true;
  }
  const ChainLeg<V>* find(std::string_view name) const {
    for (const auto& leg : legs) {
      if (leg.name == name) return &leg;
    }
    return nullptr;
  }
};

template <class V>
bool geq_within(const V& lhs, const V& rhs, double tolerance) {
  if constexpr (ValueTraits<V>::kExact) {
    return lhs >= rhs;
  } else {
    return lhs >= rhs - tolerance;
  }
}

inline constexpr std::string_view kLegBsUpper = "B_s >= f(O_K)";
inline constexpr std::string_view kLegRatio = "f(G_K)/f(O_K) >= beta2";
inline constexpr std::string_view kLegBeta1G = "beta2 >= beta1(gamma_G)";
inline constexpr std::string_view kLegBeta1Gpp = "beta2 >= beta1(gamma_G'')";
inline constexpr std::string_view kLegCombinedG = "beta2 >= 1/g + (1-1/g) f(g1)/B_s, g = gamma_G";
inline constexpr std::string_view kLegCombinedBeta1 = "1/g + (1-1/g) f(g1)/B_s >= beta1(g), g = gamma_G";
inline constexpr std::string_view kLegMidG = "f(g1) + gamma_G sum Delta(G_i) >= B_s";
inline constexpr std::string_view kLegMidGpp = "f(g1) + gamma_G'' sum Delta(G_i) >= B_s";

// Greedy, bounds, brute-force optimum, assumptions, then every inequality of
// the chain whose assumptions were verified. Throws ChainViolation (when
// options.throw_on_violation) if an applicable leg fails.
template <class V>
SuperiorityReport<V> verify_superiority(const ProblemInstance<V>& problem,
                                        const VerifyOptions& options = {}) {
  using T = ValueTraits<V>;
  SuperiorityReport<V> rep;
  rep.trace = run_greedy(problem);
  rep.bounds = compute_bound_report(problem, rep.trace, options.guard);
  rep.opt = brute_force_optimal(problem, options.search_cap);
  rep.assumptions = check_assumptions(problem, rep.trace, rep.opt, options);
  rep.bounds.f_opt = rep.opt.value;

  const auto& A = rep.assumptions;
  const auto& b = rep.bounds;
  const double tol = options.chain_tolerance;
  const V f_opt = rep.opt.value;
  const bool opt_positive = T::is_positive(f_opt);
  if (opt_positive) rep.bounds.ratio = b.f_GK / f_opt;

  V sum_tail = T::from_int(0);
  for (std::size_t i = 1; i < rep.trace.horizon(); ++i) sum_tail = sum_tail + rep.trace.increments[i];

  auto add = [&](std::string_view name, bool applicable, std::string requires_,
                 auto lhs_fn, auto rhs_fn) {
    ChainLeg<V> leg;
    leg.name = std::string(name);
    leg.applicable = applicable;
    leg.requires_ = std::move(requires_);
    if (applicable) {
      leg.lhs = lhs_fn();
      leg.rhs = rhs_fn();
      leg.holds = geq_within(leg.lhs, leg.rhs, tol);
    }
    rep.legs.push_back(std::move(leg));
  };

  const bool a12 = A.holds_through(2);
  const bool a15 = A.holds_through(5);
  const bool a17 = A.holds_through(7);
  add(kLegBsUpper, a12, "A1-A2", [&] { return b.B_s; }, [&] { return f_opt; });
  add(kLegRatio, a12 && opt_positive, "A1-A2, f(O_K) > 0", [&] { return *rep.bounds.ratio; },
      [&] { return b.beta2; });
  add(kLegBeta1G, a15 && b.beta1_G.has_value(), "A1-A5, gamma_G defined",
      [&] { return b.beta2; }, [&] { return *b.beta1_G; });
  add(kLegCombinedG, a15 && b.beta1_G.has_value(), "A1-A5, gamma_G defined",
      [&] { return b.beta2; }, [&] { return combined_bound(b.gamma_G.value, b.f_g1, b.B_s); });
  add(kLegCombinedBeta1, b.beta1_G.has_value() && T::is_positive(b.B_s) &&
                             T::leq(b.f_g1, b.B_s),
      "gamma_G defined, f(g1) <= B_s",
      [&] { return combined_bound(b.gamma_G.value, b.f_g1, b.B_s); },
      [&] { return *b.beta1_G; });
  add(kLegBeta1Gpp, a17 && b.beta1_Gpp.has_value(), "A1-A7, gamma_G'' defined",
      [&] { return b.beta2; }, [&] { return *b.beta1_Gpp; });
  add(kLegMidG, b.gamma_G.defined(), "gamma_G defined",
      [&] { return b.f_g1 + b.gamma_G.value * sum_tail; }, [&] { return b.B_s; });
  add(kLegMidGpp, b.gamma_Gpp.defined() && A[6].holds(), "gamma_G'' defined, A6",
      [&] { return b.f_g1 + b.gamma_Gpp.value * sum_tail; }, [&] { return b.B_s; });

  if (options.throw_on_violation && !rep.ok()) {
    std::ostringstream msg;
    for (const auto& leg : rep.legs) {
      if (leg.applicable && !leg.holds) {
        msg << "chain violation: " << leg.name << " (" << T::format(leg.lhs) << " < "
            << T::format(leg.rhs) << ")";
        break;
      }
    }
    msg << "; greedy " << problem.describe(rep.trace.choices) << ", optimum "
        << problem.describe(rep.opt.best);
    throw ChainViolation(msg.str());
  }
  return rep;
}

}  // namespace greedy_certify
