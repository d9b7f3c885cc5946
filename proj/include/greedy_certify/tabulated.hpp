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

// Problems given by an explicit value table.
//
// JSON form:
//   {"ground_size": n, "horizon": K,
//    "permutation_invariant": bool, "repeat_allowed": bool,
//    "max_length": L,                 (optional; longer strings are infeasible)
//    "symbol_names": ["w", ...],      (optional)
//    "values": [{"seq": [ids...], "value": number | "p/q"}, ...]}
//
// A sequence is feasible iff it is tabulated, respects repeat_allowed, and is
// no longer than max_length. Tabulated sequences longer than max_length stay
// readable through the objective (post-horizon probes use them). The empty
// string is always feasible and has value 0 unless tabulated otherwise. For
// permutation-invariant tables, entries are keyed by their sorted symbols.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "greedy_certify/errors.hpp"
#include "greedy_certify/problem.hpp"
#include "greedy_certify/string_seq.hpp"
#include "greedy_certify/value.hpp"
#include "json.hpp"

namespace greedy_certify {

template <class V>
struct TabulatedData {
  std::size_t ground_size = 0;
  std::size_t horizon = 0;
  bool permutation_invariant = false;
  bool repeat_allowed = true;
  std::optional<std::size_t> max_length;
  std::vector<std::string> symbol_names;
  std::map<StringSeq, V> values;  // canonical keys

  StringSeq canonical(std::span<const SymbolId> seq) const {
    std::vector<SymbolId> key(seq.begin(), seq.end());
    if (permutation_invariant) std::sort(key.begin(), key.end());
    return StringSeq(std::move(key));
  }

  // Inserts or overwrites f(seq).
  void set(const StringSeq& seq, V value) { values[canonical(seq.view())] = std::move(value); }

  const V* find(std::span<const SymbolId> seq) const {
    auto it = values.find(canonical(seq));
    return it == values.end() ? nullptr : &it->second;
  }
};

template <class V>
class TabulatedObjective final : public ObjectiveOracle<V> {
 public:
  explicit TabulatedObjective(std::shared_ptr<const TabulatedData<V>> data)
      : data_(std::move(data)) {}

  bool defined(std::span<const SymbolId> seq) const override {
    return seq.empty() || data_->find(seq) != nullptr;
  }

  V evaluate(std::span<const SymbolId> seq) const override {
    if (const V* v = data_->find(seq)) return *v;
    if (seq.empty()) return ValueTraits<V>::from_int(0);
    throw UndefinedValue("sequence not tabulated");
  }

 private:
  std::shared_ptr<const TabulatedData<V>> data_;
};

template <class V>
class TabulatedDomain final : public FeasibilityOracle {
 public:
  explicit TabulatedDomain(std::shared_ptr<const TabulatedData<V>> data)
      : data_(std::move(data)) {}

  bool member(std::span<const SymbolId> seq) const override {
    if (seq.empty()) return true;
    if (data_->max_length && seq.size() > *data_->max_length) return false;
    for (SymbolId s : seq) {
      if (s >= data_->ground_size) return false;
    }
    if (!data_->repeat_allowed && has_repeats(seq)) return false;
    return data_->find(seq) != nullptr;
  }

  std::optional<std::size_t> max_length() const override {
    std::size_t longest = 0;
    for (const auto& [key, value] : data_->values) longest = std::max(longest, key.size());
    if (data_->max_length) longest = std::min(longest, *data_->max_length);
    return longest;
  }

 private:
  std::shared_ptr<const TabulatedData<V>> data_;
};

template <class V>
ProblemInstance<V> make_tabulated_problem(TabulatedData<V> data) {
  auto shared = std::make_shared<const TabulatedData<V>>(std::move(data));
  ProblemInstance<V> problem(
      shared->ground_size, shared->horizon, std::make_shared<TabulatedObjective<V>>(shared),
      std::make_shared<TabulatedDomain<V>>(shared),
      ProblemTraits{shared->permutation_invariant, shared->repeat_allowed});
  problem.set_symbol_names(shared->symbol_names);
  return problem;
}

// True when every value is an integer or a "p/q" string, so the instance can
// be loaded as exact rationals.
template <class Json>
bool tabulated_json_is_exact(const Json& j) {
  try {
    for (const auto& entry : j.at("values")) {
      const auto& v = entry.at("value");
      if (v.is_number_integer()) continue;
      if (v.is_string()) {
        const auto s = v.template get<std::string>();
        if (s.find_first_of(".eE") == std::string::npos) continue;
      }
      return false;
    }
  } catch (const nlohmann::detail::exception& e) {
    throw FormatError(std::string("malformed instance: ") + e.what());
  }
  return true;
}

template <class V, class Json>
TabulatedData<V> tabulated_from_json(const Json& j) {
  TabulatedData<V> data;
  try {
    data.ground_size = j.at("ground_size").template get<std::size_t>();
    data.horizon = j.at("horizon").template get<std::size_t>();
    data.permutation_invariant = j.value("permutation_invariant", false);
    data.repeat_allowed = j.value("repeat_allowed", true);
    if (j.contains("max_length")) data.max_length = j.at("max_length").template get<std::size_t>();
    if (j.contains("symbol_names")) {
      data.symbol_names = j.at("symbol_names").template get<std::vector<std::string>>();
    }
    for (const auto& entry : j.at("values")) {
      const auto ids = entry.at("seq").template get<std::vector<SymbolId>>();
      for (SymbolId s : ids) {
        if (s >= data.ground_size) {
          throw FormatError("symbol id " + std::to_string(s) + " outside ground set");
        }
      }
      const auto& raw = entry.at("value");
      V value;
      if (raw.is_string()) {
        value = ValueTraits<V>::parse(raw.template get<std::string>());
      } else if (raw.is_number_integer()) {
        value = ValueTraits<V>::from_int(raw.template get<std::int64_t>());
      } else if (raw.is_number()) {
        if constexpr (ValueTraits<V>::kExact) {
          throw FormatError("non-integer number in an exact table; use a 'p/q' string");
        } else {
          value = raw.template get<double>();
        }
      } else {
        throw FormatError("value must be a number or a fraction string");
      }
      const StringSeq key = data.canonical(ids);
      if (auto it = data.values.find(key); it != data.values.end() && !(it->second == value)) {
        throw FormatError("conflicting values for " + to_string(key));
      }
      data.values[key] = value;
    }
  } catch (const nlohmann::detail::exception& e) {
    throw FormatError(std::string("malformed instance: ") + e.what());
  }
  if (data.ground_size == 0) throw FormatError("ground_size must be positive");
  if (data.horizon == 0) throw FormatError("horizon must be at least 1");
  return data;
}

template <class V>
nlohmann::ordered_json tabulated_to_json(const TabulatedData<V>& data) {
  nlohmann::ordered_json j;
  j["ground_size"] = data.ground_size;
  j["horizon"] = data.horizon;
  j["permutation_invariant"] = data.permutation_invariant;
  j["repeat_allowed"] = data.repeat_allowed;
  if (data.max_length) j["max_length"] = *data.max_length;
  if (!data.symbol_names.empty()) j["symbol_names"] = data.symbol_names;
  nlohmann::ordered_json values = nlohmann::ordered_json::array();
  // Shorter strings first, then lexicographic.
  std::vector<const std::pair<const StringSeq, V>*> entries;
  for (const auto& kv : data.values) entries.push_back(&kv);
  std::stable_sort(entries.begin(), entries.end(),
                   [](auto* a, auto* b) { return a->first.size() < b->first.size(); });
  for (const auto* kv : entries) {
    nlohmann::ordered_json e;
    e["seq"] = kv->first.symbols();
    if constexpr (ValueTraits<V>::kExact) {
      if (denominator(kv->second) == 1) {
        e["value"] = numerator(kv->second).template convert_to<std::int64_t>();
      } else {
        e["value"] = kv->second.str();
      }
    } else {
      e["value"] = kv->second;
    }
    values.push_back(std::move(e));
  }
  j["values"] = std::move(values);
  return j;
}

}  // namespace greedy_certify
