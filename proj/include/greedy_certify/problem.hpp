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

// A string optimisation problem: maximise f(S) over S in a feasible domain T
// with |S| = K. The problem owns the two oracles (objective and feasibility)
// and a per-instance memo of objective values keyed by the exact sequence.

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "greedy_certify/errors.hpp"
#include "greedy_certify/string_seq.hpp"
#include "greedy_certify/value.hpp"

namespace greedy_certify {

// f: T -> V. Implementations must be pure: the same sequence always yields
// the same value.
template <class V>
class ObjectiveOracle {
 public:
  virtual ~ObjectiveOracle() = default;

  virtual V evaluate(std::span<const SymbolId> seq) const = 0;

  // Whether evaluate() has a value for `seq`. Sequences outside the feasible
  // domain may still be defined (post-horizon probes read them).
  virtual bool defined(std::span<const SymbolId> /*seq*/) const { return true; }

  // out[i] = f(prefix + candidates[i]). Override when appending one symbol
  // can be evaluated faster than a full evaluation.
  virtual void evaluate_extensions(std::span<const SymbolId> prefix,
                                   std::span<const SymbolId> candidates,
                                   std::span<V> out) const {
    std::vector<SymbolId> buf(prefix.begin(), prefix.end());
    buf.push_back(0);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      buf.back() = candidates[i];
      out[i] = evaluate(buf);
    }
  }
};

// Membership in the feasible domain T.
class FeasibilityOracle {
 public:
  virtual ~FeasibilityOracle() = default;

  virtual bool member(std::span<const SymbolId> seq) const = 0;

  // S(seq) = {s : seq s in T}, ascending.
  virtual std::vector<SymbolId> feasible_next(std::span<const SymbolId> seq,
                                              std::size_t ground_size) const {
    std::vector<SymbolId> out;
    std::vector<SymbolId> buf(seq.begin(), seq.end());
    buf.push_back(0);
    for (SymbolId s = 0; s < ground_size; ++s) {
      buf.back() = s;
      if (member(buf)) out.push_back(s);
    }
    return out;
  }

  // Longest member length, when known.
  virtual std::optional<std::size_t> max_length() const { return std::nullopt; }
};

// Every sequence of length <= rank, optionally without repeated symbols.
// Without repeats this is the uniform matroid embedded as strings.
class UniformDomain final : public FeasibilityOracle {
 public:
  UniformDomain(std::size_t ground_size, std::size_t rank, bool repeat_allowed)
      : ground_size_(ground_size), rank_(rank), repeat_allowed_(repeat_allowed) {}

  bool member(std::span<const SymbolId> seq) const override {
    if (seq.size() > rank_) return false;
    for (SymbolId s : seq) {
      if (s >= ground_size_) return false;
    }
    return repeat_allowed_ || !has_repeats(seq);
  }

  std::vector<SymbolId> feasible_next(std::span<const SymbolId> seq,
                                      std::size_t ground_size) const override {
    std::vector<SymbolId> out;
    if (seq.size() >= rank_) return out;
    std::vector<bool> used(ground_size, false);
    if (!repeat_allowed_) {
      for (SymbolId s : seq) {
        if (s < ground_size) used[s] = true;
      }
    }
    for (SymbolId s = 0; s < ground_size; ++s) {
      if (!used[s]) out.push_back(s);
    }
    return out;
  }

  std::optional<std::size_t> max_length() const override { return rank_; }

 private:
  std::size_t ground_size_;
  std::size_t rank_;
  bool repeat_allowed_;
};

struct ProblemTraits {
  // f is unchanged by permuting the symbols of a string.
  bool permutation_invariant = false;
  // A symbol may occur more than once in a feasible string.
  bool repeat_allowed = true;
};

template <class V>
class ProblemInstance {
 public:
  using value_type = V;

  ProblemInstance(std::size_t ground_size, std::size_t horizon,
                  std::shared_ptr<const ObjectiveOracle<V>> objective,
                  std::shared_ptr<const FeasibilityOracle> feasibility, ProblemTraits traits = {})
      : ground_size_(ground_size),
        horizon_(horizon),
        objective_(std::move(objective)),
        feasibility_(std::move(feasibility)),
        traits_(traits),
        state_(std::make_shared<MemoState>()) {
    if (ground_size_ == 0) throw std::invalid_argument("ground set must be nonempty");
    if (horizon_ == 0) throw std::invalid_argument("horizon must be at least 1");
    if (!objective_ || !feasibility_) throw std::invalid_argument("missing oracle");
  }

  std::size_t ground_size() const { return ground_size_; }
  std::size_t horizon() const { return horizon_; }
  bool permutation_invariant() const { return traits_.permutation_invariant; }
  bool repeat_allowed() const { return traits_.repeat_allowed; }
  const ProblemTraits& traits() const { return traits_; }
  const ObjectiveOracle<V>& objective() const { return *objective_; }
  const FeasibilityOracle& feasibility() const { return *feasibility_; }

  // Same oracles, different horizon, fresh memo.
  ProblemInstance with_horizon(std::size_t horizon) const {
    ProblemInstance out(ground_size_, horizon, objective_, feasibility_, traits_);
    out.names_ = names_;
    out.state_->memoize = state_->memoize;
    return out;
  }

  bool member(const StringSeq& s) const { return feasibility_->member(s.view()); }
  std::vector<SymbolId> feasible_next(const StringSeq& s) const {
    return feasibility_->feasible_next(s.view(), ground_size_);
  }
  bool defined(const StringSeq& s) const { return objective_->defined(s.view()); }

  // f(s), memoised. Sequences outside T are evaluated too if the objective
  // defines them.
  V value(const StringSeq& s) const {
    if (state_->memoize) {
      if (auto it = state_->memo.find(s); it != state_->memo.end()) return it->second;
    }
    V v = evaluate_uncached(s.view());
    if (state_->memoize) state_->memo.emplace(s, v);
    return v;
  }

  // f(prefix c) for each candidate c, memoised.
  std::vector<V> extension_values(const StringSeq& prefix,
                                  std::span<const SymbolId> candidates) const {
    std::vector<V> out(candidates.size());
    if (!state_->memoize) {
      extension_values_uncached(prefix.view(), candidates, out);
      return out;
    }
    std::vector<SymbolId> missing;
    std::vector<std::size_t> missing_at;
    StringSeq key = prefix;
    key.push_back(0);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      key.pop_back();
      key.push_back(candidates[i]);
      if (auto it = state_->memo.find(key); it != state_->memo.end()) {
        out[i] = it->second;
      } else {
        missing.push_back(candidates[i]);
        missing_at.push_back(i);
      }
    }
    if (!missing.empty()) {
      std::vector<V> fresh(missing.size());
      extension_values_uncached(prefix.view(), missing, fresh);
      for (std::size_t j = 0; j < missing.size(); ++j) {
        key.pop_back();
        key.push_back(missing[j]);
        state_->memo.emplace(key, fresh[j]);
        out[missing_at[j]] = fresh[j];
      }
    }
    return out;
  }

  // One call to the objective oracle; counts exactly one evaluation.
  V evaluate_uncached(std::span<const SymbolId> s) const {
    if (!objective_->defined(s)) {
      throw UndefinedValue("objective undefined at " + to_string(StringSeq(s), names_));
    }
    ++state_->evaluations;
    return objective_->evaluate(s);
  }

  void extension_values_uncached(std::span<const SymbolId> prefix,
                                 std::span<const SymbolId> candidates, std::span<V> out) const {
    state_->evaluations += candidates.size();
    objective_->evaluate_extensions(prefix, candidates, out);
  }

  std::size_t evaluations() const { return state_->evaluations; }
  std::size_t cache_size() const { return state_->memo.size(); }
  void set_memoize(bool on) {
    state_->memoize = on;
    if (!on) state_->memo.clear();
  }
  void clear_cache() { state_->memo.clear(); }

  void set_symbol_names(std::vector<std::string> names) { names_ = std::move(names); }
  const std::vector<std::string>& symbol_names() const { return names_; }
  std::string describe(const StringSeq& s) const { return to_string(s, names_); }

 private:
  struct MemoState {
    std::unordered_map<StringSeq, V, StringSeqHash> memo;
    std::size_t evaluations = 0;
    bool memoize = true;
  };

  std::size_t ground_size_;
  std::size_t horizon_;
  std::shared_ptr<const ObjectiveOracle<V>> objective_;
  std::shared_ptr<const FeasibilityOracle> feasibility_;
  ProblemTraits traits_;
  std::vector<std::string> names_;
  // Shared by copies of the same instance; a solve is single-threaded.
  std::shared_ptr<MemoState> state_;
};

// Adapts a callable f(span<const SymbolId>) -> V.
template <class V, class Fn>
class FunctionObjective final : public ObjectiveOracle<V> {
 public:
  explicit FunctionObjective(Fn fn) : fn_(std::move(fn)) {}
  V evaluate(std::span<const SymbolId> seq) const override { return fn_(seq); }

 private:
  Fn fn_;
};

template <class V, class Fn>
std::shared_ptr<const ObjectiveOracle<V>> make_objective(Fn fn) {
  return std::make_shared<FunctionObjective<V, Fn>>(std::move(fn));
}

}  // namespace greedy_certify
