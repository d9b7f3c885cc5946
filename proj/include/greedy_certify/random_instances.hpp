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

// Seeded generators of small tabulated instances for property testing.
// Each family guarantees the structure its name promises:
//
//   kMonotone        f(S) = max_{a in S} f(S \ a) + U(0,1): nondecreasing
//   kCoverage        weighted coverage of a 10-element universe: monotone
//                    submodular
//   kConcaveModular  sum of square roots of nonnegative modular functions:
//                    monotone submodular
//   kUnstructured    f(S) ~ U(0, n) independently; f(empty) = 0
//
// Set instances are permutation invariant without repeats. The domain is the
// full power set, a uniform matroid of rank r >= K (the power set is still
// tabulated for post-horizon probes), or a partition matroid (only
// independent sets tabulated).

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "greedy_certify/seed.hpp"
#include "greedy_certify/tabulated.hpp"

namespace greedy_certify {

enum class SetFamily { kMonotone, kCoverage, kConcaveModular, kUnstructured };
enum class SetDomain { kFree, kUniform, kPartition };

inline std::string to_string(SetFamily f) {
  switch (f) {
    case SetFamily::kMonotone: return "monotone";
    case SetFamily::kCoverage: return "coverage";
    case SetFamily::kConcaveModular: return "concave";
    case SetFamily::kUnstructured: return "unstructured";
  }
  return "?";
}

inline std::string to_string(SetDomain d) {
  switch (d) {
    case SetDomain::kFree: return "free";
    case SetDomain::kUniform: return "uniform";
    case SetDomain::kPartition: return "partition";
  }
  return "?";
}

struct SetInstanceSpec {
  std::size_t ground_size = 4;
  std::size_t horizon = 2;
  SetFamily family = SetFamily::kMonotone;
  SetDomain domain = SetDomain::kFree;
};

inline StringSeq mask_to_seq(std::uint32_t mask) {
  StringSeq s;
  for (SymbolId i = 0; mask >> i; ++i) {
    if (mask >> i & 1u) s.push_back(i);
  }
  return s;
}

// Values for every subset mask of an n-symbol ground set.
inline std::vector<double> random_set_function(std::size_t n, SetFamily family, CounterRng& rng) {
  const std::uint32_t full = 1u << n;
  std::vector<double> f(full, 0.0);
  switch (family) {
    case SetFamily::kMonotone: {
      std::vector<std::uint32_t> order(full);
      for (std::uint32_t m = 0; m < full; ++m) order[m] = m;
      std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) < std::popcount(b);
      });
      for (std::uint32_t m : order) {
        if (m == 0) continue;
        double best = 0.0;
        for (std::uint32_t rest = m; rest; rest &= rest - 1) {
          best = std::max(best, f[m & ~(rest & -rest)]);
        }
        f[m] = best + rng.uniform();
      }
      break;
    }
    case SetFamily::kCoverage: {
      constexpr std::size_t kUniverse = 10;
      std::vector<double> weight(kUniverse);
      for (double& w : weight) w = rng.uniform();
      std::vector<std::uint32_t> covers(n, 0);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t e = 0; e < kUniverse; ++e) {
          if (rng.uniform() < 0.35) covers[a] |= 1u << e;
        }
      }
      for (std::uint32_t m = 1; m < full; ++m) {
        std::uint32_t covered = 0;
        for (std::size_t a = 0; a < n; ++a) {
          if (m >> a & 1u) covered |= covers[a];
        }
        for (std::size_t e = 0; e < kUniverse; ++e) {
          if (covered >> e & 1u) f[m] += weight[e];
        }
      }
      break;
    }
    case SetFamily::kConcaveModular: {
      constexpr std::size_t kTerms = 3;
      std::vector<double> w(kTerms * n);
      for (double& x : w) x = rng.uniform();
      for (std::uint32_t m = 1; m < full; ++m) {
        for (std::size_t c = 0; c < kTerms; ++c) {
          double sum = 0.0;
          for (std::size_t a = 0; a < n; ++a) {
            if (m >> a & 1u) sum += w[c * n + a];
          }
          f[m] += std::sqrt(sum);
        }
      }
      break;
    }
    case SetFamily::kUnstructured: {
      for (std::uint32_t m = 1; m < full; ++m) f[m] = rng.uniform(0.0, static_cast<double>(n));
      break;
    }
  }
  return f;
}

inline TabulatedData<double> random_set_instance(const SetInstanceSpec& spec,
                                                 std::uint64_t seed) {
  CounterRng rng(seed);
  const std::size_t n = spec.ground_size;
  const std::vector<double> f = random_set_function(n, spec.family, rng);

  TabulatedData<double> data;
  data.ground_size = n;
  data.horizon = spec.horizon;
  data.permutation_invariant = true;
  data.repeat_allowed = false;

  // Partition matroid: symbols dealt into groups of size <= 2, capacity 1
  // each except the first group, which may hold two.
  std::vector<std::size_t> group(n);
  std::vector<std::size_t> capacity;
  if (spec.domain == SetDomain::kPartition) {
    std::size_t g = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (a > 0 && rng.uniform() < 0.5) ++g;
      group[a] = g;
    }
    capacity.assign(g + 1, 1);
    capacity[0] = 2;
    std::vector<std::size_t> sizes(g + 1, 0);
    for (std::size_t a = 0; a < n; ++a) ++sizes[group[a]];
    std::size_t rank = 0;
    for (std::size_t i = 0; i <= g; ++i) rank += std::min(sizes[i], capacity[i]);
    // Rank below K would dead-end greedy; lift the capacities instead.
    if (rank < spec.horizon) capacity.assign(g + 1, n);
  }
  if (spec.domain == SetDomain::kUniform) {
    data.max_length = spec.horizon + rng.below(n - spec.horizon + 1);
  }

  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (spec.domain == SetDomain::kPartition) {
      std::vector<std::size_t> used(capacity.size(), 0);
      bool ok = true;
      for (std::size_t a = 0; a < n; ++a) {
        if ((m >> a & 1u) && ++used[group[a]] > capacity[group[a]]) ok = false;
      }
      if (!ok) continue;
    }
    data.set(mask_to_seq(m), f[m]);
  }
  return data;
}

// Random spec: n in [2, max_ground], K in [1, min(max_horizon, n)], family and
// domain uniform.
inline SetInstanceSpec random_set_spec(CounterRng& rng, std::size_t max_ground = 6,
                                       std::size_t max_horizon = 4) {
  SetInstanceSpec spec;
  spec.ground_size = 2 + rng.below(max_ground - 1);
  spec.horizon = 1 + rng.below(std::min(max_horizon, spec.ground_size));
  spec.family = static_cast<SetFamily>(rng.below(4));
  spec.domain = static_cast<SetDomain>(rng.below(3));
  return spec;
}

// Random string function over all strings of length <= K with repeats:
// f(S s) = f(S) + U(0,1) along every string, so it is forward monotone.
inline TabulatedData<double> random_string_instance(std::size_t n, std::size_t horizon,
                                                    std::uint64_t seed) {
  CounterRng rng(seed);
  TabulatedData<double> data;
  data.ground_size = n;
  data.horizon = horizon;
  data.permutation_invariant = false;
  data.repeat_allowed = true;
  data.max_length = horizon;
  data.set(StringSeq{}, 0.0);
  std::vector<std::pair<StringSeq, double>> frontier{{StringSeq{}, 0.0}};
  for (std::size_t len = 1; len <= horizon; ++len) {
    std::vector<std::pair<StringSeq, double>> next;
    for (const auto& [seq, value] : frontier) {
      for (SymbolId s = 0; s < n; ++s) {
        const double v = value + rng.uniform();
        StringSeq child = seq.extended(s);
        data.set(child, v);
        next.emplace_back(std::move(child), v);
      }
    }
    frontier = std::move(next);
  }
  return data;
}

}  // namespace greedy_certify
