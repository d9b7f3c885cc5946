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

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace greedy_certify {

// Index into the ground set of the owning problem.
using SymbolId = std::uint32_t;

// An ordered sequence of symbols. The empty sequence is the empty string.
// Ordering is lexicographic with a prefix ordered before its extensions,
// which is the tie-break order used by every search in the library.
class StringSeq {
 public:
  StringSeq() = default;
  StringSeq(std::initializer_list<SymbolId> symbols) : symbols_(symbols) {}
  explicit StringSeq(std::vector<SymbolId> symbols) : symbols_(std::move(symbols)) {}
  explicit StringSeq(std::span<const SymbolId> symbols)
      : symbols_(symbols.begin(), symbols.end()) {}

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  SymbolId operator[](std::size_t i) const { return symbols_[i]; }
  SymbolId back() const { return symbols_.back(); }
  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }

  std::span<const SymbolId> view() const { return symbols_; }
  const std::vector<SymbolId>& symbols() const { return symbols_; }

  void push_back(SymbolId s) { symbols_.push_back(s); }
  void pop_back() { symbols_.pop_back(); }

  // First `length` symbols (S_i).
  StringSeq prefix(std::size_t length) const {
    return StringSeq(std::vector<SymbolId>(symbols_.begin(),
                                           symbols_.begin() + static_cast<std::ptrdiff_t>(length)));
  }

  StringSeq extended(SymbolId s) const {
    StringSeq out = *this;
    out.push_back(s);
    return out;
  }

  friend bool operator==(const StringSeq&, const StringSeq&) = default;
  friend auto operator<=>(const StringSeq& a, const StringSeq& b) {
    return a.symbols_ <=> b.symbols_;
  }

 private:
  std::vector<SymbolId> symbols_;
};

struct StringSeqHash {
  std::size_t operator()(const StringSeq& s) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ s.size();
    for (SymbolId x : s) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

inline StringSeq concat(const StringSeq& a, const StringSeq& b) {
  std::vector<SymbolId> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return StringSeq(std::move(out));
}

inline bool is_prefix(const StringSeq& p, const StringSeq& s) {
  if (p.size() > s.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != s[i]) return false;
  }
  return true;
}

// C(A): the distinct symbols occurring in A.
inline std::set<SymbolId> components(const StringSeq& a) {
  return std::set<SymbolId>(a.begin(), a.end());
}

inline bool has_repeats(std::span<const SymbolId> s) {
  std::vector<SymbolId> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

// Renders "(a, b, c)" using `names` when provided, numeric ids otherwise.
inline std::string to_string(const StringSeq& s, const std::vector<std::string>& names = {}) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += s[i] < names.size() ? names[s[i]] : std::to_string(s[i]);
  }
  return out + ")";
}

}  // namespace greedy_certify
