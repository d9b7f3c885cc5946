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

// Welfare maximisation: assign M items to N agents, maximising the sum of
// the agents' utilities. Utilities are black boxes whose increments are
// bounded by the item's initial value v[j][k]:
//
//   0 <= u_j(S_j + k) - u_j(S_j) <= u_j({k}) = v[j][k].
//
// Set mode: the increment is a keyed draw from U(0, v[j][k]) that depends on
// the agent's current item set (exactly v[j][k] when the set is empty).
// String mode: the draw depends on the epoch instead (exactly v[j][k] at
// epoch 1), so utilities change over time.
//
// A decision is the pair (item k, agent j), encoded as symbol k * N + j.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "greedy_certify/bounds.hpp"
#include "greedy_certify/errors.hpp"
#include "greedy_certify/greedy.hpp"
#include "greedy_certify/parallel.hpp"
#include "greedy_certify/problem.hpp"
#include "greedy_certify/seed.hpp"

namespace greedy_certify {

enum class WelfareMode { kSet, kString };
enum class BsVariant { kPerItemMax, kTopPairs };

inline std::string to_string(WelfareMode m) { return m == WelfareMode::kSet ? "set" : "string"; }
inline std::string to_string(BsVariant b) {
  return b == BsVariant::kPerItemMax ? "per-item-max" : "top-pairs";
}

inline WelfareMode parse_welfare_mode(const std::string& s) {
  if (s == "set") return WelfareMode::kSet;
  if (s == "string") return WelfareMode::kString;
  throw std::invalid_argument("unknown welfare mode '" + s + "'");
}

inline BsVariant parse_bs_variant(const std::string& s) {
  if (s == "per-item-max") return BsVariant::kPerItemMax;
  if (s == "top-pairs") return BsVariant::kTopPairs;
  throw std::invalid_argument("unknown B_s variant '" + s + "'");
}

struct UtilityModel {
  std::size_t agents = 0;
  std::size_t items = 0;
  WelfareMode mode = WelfareMode::kSet;
  std::uint64_t seed = 0;
  std::vector<double> v;  // v[j * items + k]

  double initial(std::size_t agent, std::size_t item) const { return v[agent * items + item]; }

  SymbolId pair(std::size_t item, std::size_t agent) const {
    return static_cast<SymbolId>(item * agents + agent);
  }
  std::size_t item_of(SymbolId s) const { return s / agents; }
  std::size_t agent_of(SymbolId s) const { return s % agents; }
};

// v[j][k] ~ U(0, 100), agent-major.
inline UtilityModel generate_utilities(std::size_t agents, std::size_t items, std::uint64_t seed,
                                       WelfareMode mode = WelfareMode::kSet) {
  if (agents == 0 || items == 0) throw std::invalid_argument("need at least one agent and item");
  UtilityModel m;
  m.agents = agents;
  m.items = items;
  m.mode = mode;
  m.seed = seed;
  m.v.resize(agents * items);
  CounterRng rng(seed_derive(seed, "utilities"));
  for (double& x : m.v) x = rng.uniform(0.0, 100.0);
  return m;
}

// Explicit values, for tests and hand-built instances.
inline UtilityModel utilities_from_matrix(const std::vector<std::vector<double>>& v,
                                          std::uint64_t seed = 0,
                                          WelfareMode mode = WelfareMode::kSet) {
  if (v.empty() || v.front().empty()) throw std::invalid_argument("empty utility matrix");
  UtilityModel m;
  m.agents = v.size();
  m.items = v.front().size();
  m.mode = mode;
  m.seed = seed;
  for (const auto& row : v) {
    if (row.size() != m.items) throw std::invalid_argument("ragged utility matrix");
    m.v.insert(m.v.end(), row.begin(), row.end());
  }
  return m;
}

struct AssignmentState {
  std::vector<std::vector<std::size_t>> sets;  // S_j, sorted
  std::vector<bool> assigned;
  std::size_t epoch = 0;  // assignments made so far

  explicit AssignmentState(const UtilityModel& m) : sets(m.agents), assigned(m.items, false) {}

  void assign(std::size_t agent, std::size_t item) {
    if (assigned[item]) {
      throw ItemAlreadyAssigned("item " + std::to_string(item) + " is already assigned");
    }
    assigned[item] = true;
    auto& s = sets[agent];
    s.insert(std::upper_bound(s.begin(), s.end(), item), item);
    ++epoch;
  }
};

// u_j(S_j + k) - u_j(S_j) if k were assigned to j at the next epoch.
inline double marginal_gain(const UtilityModel& m, std::size_t agent, std::size_t item,
                            const AssignmentState& state) {
  if (state.assigned[item]) {
    throw ItemAlreadyAssigned("item " + std::to_string(item) + " is already assigned");
  }
  const double v = m.initial(agent, item);
  SeedChain key(m.seed);
  if (m.mode == WelfareMode::kSet) {
    const auto& s = state.sets[agent];
    if (s.empty()) return v;
    key = key.then("set").then(agent);
    for (std::size_t i : s) key = key.then(i);
    key = key.then("item").then(item);
  } else {
    const std::size_t epoch = state.epoch + 1;
    if (epoch == 1) return v;
    key = key.then("string").then(agent).then(item).then(epoch);
  }
  return CounterRng(key.value()).uniform() * v;
}

// Sum of the increments along the assignment sequence.
inline double welfare_objective(const UtilityModel& m, std::span<const SymbolId> pairs) {
  AssignmentState state(m);
  double total = 0.0;
  for (SymbolId s : pairs) {
    const std::size_t item = m.item_of(s);
    const std::size_t agent = m.agent_of(s);
    total += marginal_gain(m, agent, item, state);
    state.assign(agent, item);
  }
  return total;
}

// Upper bounds on the optimal welfare from initial values only.
//   per-item-max: sum_k max_j v[j][k]
//   top-pairs:    sum of the M largest v[j][k]
inline double welfare_Bs(const UtilityModel& m, BsVariant variant) {
  if (variant == BsVariant::kPerItemMax) {
    double total = 0.0;
    for (std::size_t k = 0; k < m.items; ++k) {
      double best = 0.0;
      for (std::size_t j = 0; j < m.agents; ++j) best = std::max(best, m.initial(j, k));
      total += best;
    }
    return total;
  }
  std::vector<double> all = m.v;
  std::sort(all.begin(), all.end(), std::greater<>());
  double total = 0.0;
  for (std::size_t i = 0; i < m.items && i < all.size(); ++i) total += all[i];
  return total;
}

class WelfareObjective final : public ObjectiveOracle<double> {
 public:
  explicit WelfareObjective(UtilityModel model) : m_(std::move(model)) {}

  double evaluate(std::span<const SymbolId> seq) const override {
    return welfare_objective(m_, seq);
  }

  void evaluate_extensions(std::span<const SymbolId> prefix, std::span<const SymbolId> candidates,
                           std::span<double> out) const override {
    AssignmentState state(m_);
    double base = 0.0;
    for (SymbolId s : prefix) {
      base += marginal_gain(m_, m_.agent_of(s), m_.item_of(s), state);
      state.assign(m_.agent_of(s), m_.item_of(s));
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      out[i] = base + marginal_gain(m_, m_.agent_of(candidates[i]), m_.item_of(candidates[i]), state);
    }
  }

  const UtilityModel& model() const { return m_; }

 private:
  UtilityModel m_;
};

// Pair strings whose items are pairwise distinct: a partition matroid of
// rank M over the (item, agent) pairs.
class WelfareDomain final : public FeasibilityOracle {
 public:
  WelfareDomain(std::size_t agents, std::size_t items) : agents_(agents), items_(items) {}

  bool member(std::span<const SymbolId> seq) const override {
    if (seq.size() > items_) return false;
    std::vector<bool> used(items_, false);
    for (SymbolId s : seq) {
      const std::size_t item = s / agents_;
      if (item >= items_ || used[item]) return false;
      used[item] = true;
    }
    return true;
  }

  std::vector<SymbolId> feasible_next(std::span<const SymbolId> seq,
                                      std::size_t /*ground_size*/) const override {
    std::vector<SymbolId> out;
    if (seq.size() >= items_) return out;
    std::vector<bool> used(items_, false);
    for (SymbolId s : seq) used[s / agents_] = true;
    for (std::size_t k = 0; k < items_; ++k) {
      if (used[k]) continue;
      for (std::size_t j = 0; j < agents_; ++j) out.push_back(static_cast<SymbolId>(k * agents_ + j));
    }
    return out;
  }

  std::optional<std::size_t> max_length() const override { return items_; }

 private:
  std::size_t agents_;
  std::size_t items_;
};

// Horizon defaults to M, so greedy assigns every item.
inline ProblemInstance<double> make_welfare_problem(const UtilityModel& m,
                                                    std::size_t horizon = 0) {
  ProblemInstance<double> p(m.agents * m.items, horizon == 0 ? m.items : horizon,
                            std::make_shared<WelfareObjective>(m),
                            std::make_shared<WelfareDomain>(m.agents, m.items),
                            ProblemTraits{false, false});
  return p;
}

// Exhaustive optimum over complete assignments (every order of every
// assignment, since set-mode draws depend on order). Tiny instances only.
inline double welfare_brute_force(const UtilityModel& m) {
  double pairs = 1.0;
  for (std::size_t k = 0; k < m.items; ++k) {
    pairs *= static_cast<double>(m.agents * (m.items - k));
  }
  if (pairs > 5e6) throw SearchSpaceTooLarge("welfare brute force over " + std::to_string(pairs));
  double best = 0.0;
  AssignmentState state(m);
  auto recurse = [&](auto& self, double value) -> void {
    best = std::max(best, value);
    for (std::size_t k = 0; k < m.items; ++k) {
      if (state.assigned[k]) continue;
      for (std::size_t j = 0; j < m.agents; ++j) {
        const double gain = marginal_gain(m, j, k, state);
        AssignmentState saved = state;
        state.assign(j, k);
        self(self, value + gain);
        state = std::move(saved);
      }
    }
  };
  recurse(recurse, 0.0);
  return best;
}

struct WelfareTrial {
  double f_GK = 0.0;
  double B_s = 0.0;
  double beta2 = 0.0;
};

inline WelfareTrial run_welfare_trial(std::size_t agents, std::size_t items, WelfareMode mode,
                                      BsVariant variant, std::uint64_t trial_seed) {
  const UtilityModel m = generate_utilities(agents, items, trial_seed, mode);
  ProblemInstance<double> problem = make_welfare_problem(m);
  problem.set_memoize(false);
  const GreedyTrace<double> trace = run_greedy(problem);
  WelfareTrial t;
  t.f_GK = trace.final_value();
  t.B_s = welfare_Bs(m, variant);
  t.beta2 = beta2(t.f_GK, t.B_s);
  return t;
}

struct WelfareConfig {
  WelfareMode mode = WelfareMode::kSet;
  std::vector<std::size_t> agents{10, 20, 30, 40, 50, 60};
  std::size_t items = 60;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  BsVariant variant = BsVariant::kPerItemMax;
};

struct WelfareRow {
  WelfareMode mode = WelfareMode::kSet;
  std::size_t agents = 0;
  std::size_t items = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  BsVariant variant = BsVariant::kPerItemMax;
  double mean_beta2 = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
  double mean_f_GK = 0.0;
  double mean_B_s = 0.0;
  double beta0 = 0.0;  // beta0(M)
  double millis = 0.0;
};

// Trial t at agent count N uses seed_derive(seed, "welfare", N, t), so the
// set and string runs of one seed see the same initial values.
inline std::vector<WelfareRow> run_welfare_experiment(const WelfareConfig& config) {
  std::vector<WelfareRow> rows;
  for (std::size_t n : config.agents) {
    const auto trials = parallel_map(config.trials, [&](std::size_t t) {
      return run_welfare_trial(n, config.items, config.mode, config.variant,
                               seed_derive(config.seed, "welfare", n, t));
    });
    WelfareRow row;
    row.mode = config.mode;
    row.agents = n;
    row.items = config.items;
    row.trials = config.trials;
    row.seed = config.seed;
    row.variant = config.variant;
    row.beta0 = beta0(config.items);
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& t : trials) {
      sum += t.beta2;
      sum_sq += t.beta2 * t.beta2;
      row.mean_f_GK += t.f_GK;
      row.mean_B_s += t.B_s;
    }
    const double count = static_cast<double>(trials.size());
    row.mean_beta2 = sum / count;
    row.mean_f_GK /= count;
    row.mean_B_s /= count;
    const double var = count > 1 ? std::max(0.0, (sum_sq - count * row.mean_beta2 * row.mean_beta2) /
                                                     (count - 1))
                                 : 0.0;
    const double half = 1.96 * std::sqrt(var / count);
    row.ci95_low = row.mean_beta2 - half;
    row.ci95_high = row.mean_beta2 + half;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace greedy_certify
