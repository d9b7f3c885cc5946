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

// Portable seeding and random streams.
//
// All randomness in the library flows through two documented algorithms so
// that ports in other languages reproduce the same instances bit for bit:
//
//   mix64(z):   the SplitMix64 finaliser
//                 z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//                 z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//                 return z ^ (z >> 31)
//
//   label hash: FNV-1a 64 over the label bytes; integer labels are hashed
//               as their base-10 text.
//
//   seed_derive(master, l1, ..., ln):
//               h = master
//               for each label: h = mix64(h ^ mix64(hash(label) + GOLDEN))
//               with GOLDEN = 0x9E3779B97F4A7C15.
//
//   CounterRng(key): the i-th draw (i = 1, 2, ...) is mix64(key + i * GOLDEN),
//               i.e. SplitMix64 written in counter form. uniform() keeps the
//               top 53 bits: (draw >> 11) * 2^-53.

#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace greedy_certify {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t label_hash(std::string_view label) { return fnv1a64(label); }

template <std::integral I>
std::uint64_t label_hash(I label) {
  return fnv1a64(std::to_string(label));
}

// Incremental form of seed_derive; lets hot loops share a common label prefix.
class SeedChain {
 public:
  explicit constexpr SeedChain(std::uint64_t master) : state_(master) {}

  template <class L>
  SeedChain then(const L& label) const {
    SeedChain next = *this;
    next.state_ = mix64(state_ ^ mix64(label_hash(label) + kGoldenGamma));
    return next;
  }

  SeedChain then(const char* label) const { return then(std::string_view(label)); }

  constexpr std::uint64_t value() const { return state_; }

 private:
  std::uint64_t state_;
};

template <class... Labels>
std::uint64_t seed_derive(std::uint64_t master, const Labels&... labels) {
  SeedChain chain(master);
  ((chain = chain.then(labels)), ...);
  return chain.value();
}

class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t next() {
    ++counter_;
    return mix64(key_ + counter_ * kGoldenGamma);
  }
  std::uint64_t operator()() { return next(); }
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

  // [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // [0, n); n > 0. Modulo bias is below 2^-40 for the sizes used here.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace greedy_certify
