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

// Performance bounds for a greedy trace.
//
//   beta0  = 1 - ((K-1)/K)^K                  classical reference line
//   beta1  = 1/K + (1/gamma) (K-1)/K          greedy curvature bound, for
//            gamma = gamma_G (along the greedy trajectory) or
//            gamma = gamma_G'' (after the best string that excludes s)
//   beta2  = f(G_K) / B_s                     B_s = sum_i c_i, with c_i the
//            best length-1 value among symbols still feasible at epoch i
//
// gamma_G and gamma_G'' are only meaningful when every increment they divide
// by is positive; otherwise they are reported Undefined together with the
// offending symbol. gamma_G'' needs an exhaustive search over orderings and
// is Skipped above an enumeration guard.

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "greedy_certify/errors.hpp"
#include "greedy_certify/greedy.hpp"
#include "greedy_certify/problem.hpp"
#include "greedy_certify/string_seq.hpp"
#include "greedy_certify/value.hpp"

namespace greedy_certify {

struct EnumerationGuard {
  std::size_t max_ground = 8;
  std::size_t max_horizon = 6;
};

enum class Availability { kDefined, kUndefined, kSkipped };

template <class V>
struct GammaValue {
  Availability status = Availability::kUndefined;
  V value{};
  // For a defined gamma: where the maximum is attained. For an undefined one:
  // the first violation found (smallest epoch, then smallest symbol).
  std::size_t epoch = 0;
  std::optional<SymbolId> symbol;
  StringSeq base;  // the string the symbol was appended to
  V increment{};   // Delta(base symbol)
  std::string reason;

  bool defined() const { return status == Availability::kDefined; }
};

template <class V>
struct BsResult {
  V total{};
  std::vector<V> maxima;             // c_1 .. c_K
  std::vector<SymbolId> maximizers;  // s_1 .. s_K
};

// B_s = sum_{i=1..K} c_i, c_i = max over s in S(G_{i-1}) ∩ S(empty) of f(s).
// Also stores c_i in trace.epoch_maxima.
template <class V>
BsResult<V> compute_Bs(const ProblemInstance<V>& problem, GreedyTrace<V>& trace) {
  BsResult<V> result;
  result.total = ValueTraits<V>::from_int(0);
  const std::vector<SymbolId> singles = problem.feasible_next(StringSeq{});
  std::vector<bool> single_ok(problem.ground_size(), false);
  for (SymbolId s : singles) single_ok[s] = true;

  for (std::size_t i = 1; i <= trace.horizon(); ++i) {
    std::optional<SymbolId> best;
    V best_value{};
    for (SymbolId s : problem.feasible_next(trace.prefix(i - 1))) {
      if (!single_ok[s]) continue;
      V v = problem.value(StringSeq{s});
      if (!best || v > best_value) {
        best = s;
        best_value = v;
      }
    }
    if (!best) throw EmptyCandidateSet(i);
    result.maxima.push_back(best_value);
    result.maximizers.push_back(*best);
    result.total = result.total + best_value;
  }
  trace.epoch_maxima = result.maxima;
  return result;
}

// gamma_G = max over k in 2..K, s in S(G_{k-1}) of f(s) / Delta(G_{k-1} s).
// For K = 1 the maximum is empty; we report 1, under which beta1 = 1 as it
// is for every gamma when K = 1.
template <class V>
GammaValue<V> compute_gamma_G(const ProblemInstance<V>& problem, const GreedyTrace<V>& trace) {
  using T = ValueTraits<V>;
  GammaValue<V> out;
  if (trace.horizon() < 2) {
    out.status = Availability::kDefined;
    out.value = T::from_int(1);
    out.reason = "horizon 1: empty maximum";
    return out;
  }
  bool have = false;
  for (std::size_t k = 2; k <= trace.horizon(); ++k) {
    const StringSeq base = trace.prefix(k - 1);
    const V base_value = trace.values[k - 2];
    const std::vector<SymbolId> candidates = problem.feasible_next(base);
    const std::vector<V> ext = problem.extension_values(base, candidates);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const V delta = ext[i] - base_value;
      if (!T::is_positive(delta)) {
        GammaValue<V> bad;
        bad.status = Availability::kUndefined;
        bad.epoch = k;
        bad.symbol = candidates[i];
        bad.base = base;
        bad.increment = delta;
        bad.reason = "non-positive increment Delta(G_" + std::to_string(k - 1) + " " +
                     problem.describe(StringSeq{candidates[i]}) + ") = " + T::format(delta);
        return bad;
      }
      const V ratio = problem.value(StringSeq{candidates[i]}) / delta;
      if (!have || ratio > out.value) {
        have = true;
        out.value = ratio;
        out.epoch = k;
        out.symbol = candidates[i];
        out.base = base;
        out.increment = delta;
      }
    }
  }
  out.status = Availability::kDefined;
  return out;
}

// sigma_T(X): every member of T of length |X| using only symbols of X, in
// lexicographic order. Symbols may repeat when the problem allows repeats.
template <class V>
std::vector<StringSeq> compute_sigma_T(const ProblemInstance<V>& problem,
                                       const std::set<SymbolId>& symbols,
                                       std::size_t max_symbols = 8) {
  if (symbols.size() > max_symbols) {
    throw SizeGuard("sigma_T enumeration over " + std::to_string(symbols.size()) +
                    " symbols exceeds the guard of " + std::to_string(max_symbols));
  }
  const std::vector<SymbolId> pool(symbols.begin(), symbols.end());
  const std::size_t length = pool.size();
  const bool repeats = problem.repeat_allowed();
  std::vector<StringSeq> out;
  std::vector<bool> used(pool.size(), false);
  StringSeq current;

  auto recurse = [&](auto& self) -> void {
    if (current.size() == length) {
      if (problem.member(current)) out.push_back(current);
      return;
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!repeats && used[i]) continue;
      used[i] = true;
      current.push_back(pool[i]);
      self(self);
      current.pop_back();
      used[i] = false;
    }
  };
  recurse(recurse);
  return out;
}

// M_T(S \ s): the best member of sigma_T(S \ s); lexicographically first on
// ties. nullopt when sigma_T(S \ s) is empty.
template <class V>
std::optional<StringSeq> best_completion_without(const ProblemInstance<V>& problem, SymbolId s,
                                                 std::size_t max_symbols = 8) {
  std::set<SymbolId> rest;
  for (SymbolId u = 0; u < problem.ground_size(); ++u) {
    if (u != s) rest.insert(u);
  }
  std::optional<StringSeq> best;
  V best_value{};
  for (const StringSeq& candidate : compute_sigma_T(problem, rest, max_symbols)) {
    V v = problem.value(candidate);
    if (!best || v > best_value) {
      best = candidate;
      best_value = v;
    }
  }
  return best;
}

inline bool guard_allows(const EnumerationGuard& guard, std::size_t ground_size,
                         std::size_t horizon) {
  return ground_size <= guard.max_ground && horizon <= guard.max_horizon;
}

// gamma_G'' = max over s != g_1 of f(s) / Delta(M_T(S \ s) s).
template <class V>
GammaValue<V> compute_gamma_Gpp(const ProblemInstance<V>& problem, const GreedyTrace<V>& trace,
                                const EnumerationGuard& guard = {}) {
  using T = ValueTraits<V>;
  GammaValue<V> out;
  if (!guard_allows(guard, problem.ground_size(), problem.horizon())) {
    out.status = Availability::kSkipped;
    out.reason = "ground set " + std::to_string(problem.ground_size()) + " / horizon " +
                 std::to_string(problem.horizon()) + " above enumeration guard " +
                 std::to_string(guard.max_ground) + " / " + std::to_string(guard.max_horizon);
    return out;
  }
  const SymbolId g1 = trace.choices[0];
  bool have = false;
  for (SymbolId s = 0; s < problem.ground_size(); ++s) {
    if (s == g1) continue;
    auto undefined = [&](std::string why) {
      GammaValue<V> bad;
      bad.status = Availability::kUndefined;
      bad.symbol = s;
      bad.reason = std::move(why);
      return bad;
    };
    const std::optional<StringSeq> m = best_completion_without(problem, s, guard.max_ground);
    if (!m) return undefined("sigma_T(S \\ " + problem.describe(StringSeq{s}) + ") is empty");
    const StringSeq ms = m->extended(s);
    if (!problem.defined(ms)) {
      return undefined("f undefined at " + problem.describe(ms));
    }
    if (!problem.defined(StringSeq{s})) {
      return undefined("f undefined at " + problem.describe(StringSeq{s}));
    }
    const V delta = problem.value(ms) - problem.value(*m);
    if (!T::is_positive(delta)) {
      GammaValue<V> bad = undefined("non-positive increment Delta(" + problem.describe(ms) +
                                    ") = " + T::format(delta));
      bad.base = *m;
      bad.increment = delta;
      return bad;
    }
    const V ratio = problem.value(StringSeq{s}) / delta;
    if (!have || ratio > out.value) {
      have = true;
      out.value = ratio;
      out.symbol = s;
      out.base = *m;
      out.increment = delta;
    }
  }
  if (!have) {
    // Single-symbol ground set: nothing to maximise over.
    out.status = Availability::kUndefined;
    out.reason = "S \\ {g_1} is empty";
    return out;
  }
  out.status = Availability::kDefined;
  return out;
}

inline double beta0(std::size_t horizon) {
  if (horizon == 0) throw std::invalid_argument("beta0 needs K >= 1");
  if (horizon == 1) return 1.0;
  const double k = static_cast<double>(horizon);
  return -std::expm1(k * std::log1p(-1.0 / k));
}

template <class V>
bool gamma_at_least_one(const V& gamma) {
  return ValueTraits<V>::leq(ValueTraits<V>::from_int(1), gamma);
}

template <class V>
V beta1(const V& gamma, std::size_t horizon) {
  using T = ValueTraits<V>;
  if (!gamma_at_least_one(gamma)) {
    throw GammaBelowOne("gamma = " + T::format(gamma) + " < 1");
  }
  const V k = T::from_int(static_cast<std::int64_t>(horizon));
  const V one = T::from_int(1);
  return one / k + (one / gamma) * (k - one) / k;
}

template <class V>
V beta2(const V& f_GK, const V& B_s) {
  if (!ValueTraits<V>::is_positive(B_s)) {
    throw NonpositiveBound("B_s = " + ValueTraits<V>::format(B_s) + " is not positive");
  }
  return f_GK / B_s;
}

// 1/gamma + (1 - 1/gamma) f(g_1)/B for an upper bound B of f(O_K).
template <class V>
V combined_bound(const V& gamma, const V& f_g1, const V& bound) {
  using T = ValueTraits<V>;
  if (!gamma_at_least_one(gamma)) {
    throw GammaBelowOne("gamma = " + T::format(gamma) + " < 1");
  }
  if (!T::is_positive(bound)) {
    throw NonpositiveBound("B = " + T::format(bound) + " is not positive");
  }
  const V one = T::from_int(1);
  return one / gamma + (one - one / gamma) * f_g1 / bound;
}

template <class V>
struct BoundReport {
  std::size_t horizon = 0;
  std::size_t ground_size = 0;
  V f_GK{};
  V f_g1{};
  V B_s{};
  std::vector<V> epoch_maxima;
  GammaValue<V> gamma_G;
  GammaValue<V> gamma_Gpp;
  double beta0 = 0.0;
  std::optional<V> beta1_G;
  std::optional<V> beta1_Gpp;
  V beta2{};
  // Filled by callers that know the optimum.
  std::optional<V> f_opt;
  std::optional<V> ratio;
};

template <class V>
std::optional<V> beta1_if_defined(const GammaValue<V>& gamma, std::size_t horizon) {
  if (!gamma.defined() || !gamma_at_least_one(gamma.value)) return std::nullopt;
  return beta1(gamma.value, horizon);
}

template <class V>
BoundReport<V> compute_bound_report(const ProblemInstance<V>& problem, GreedyTrace<V>& trace,
                                    const EnumerationGuard& guard = {}) {
  BoundReport<V> r;
  r.horizon = trace.horizon();
  r.ground_size = problem.ground_size();
  r.f_GK = trace.final_value();
  r.f_g1 = trace.first_value();
  const BsResult<V> bs = compute_Bs(problem, trace);
  r.B_s = bs.total;
  r.epoch_maxima = bs.maxima;
  r.gamma_G = compute_gamma_G(problem, trace);
  r.gamma_Gpp = compute_gamma_Gpp(problem, trace, guard);
  r.beta0 = beta0(r.horizon);
  r.beta1_G = beta1_if_defined(r.gamma_G, r.horizon);
  r.beta1_Gpp = beta1_if_defined(r.gamma_Gpp, r.horizon);
  r.beta2 = beta2(r.f_GK, r.B_s);
  return r;
}

}  // namespace greedy_certify
