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

// Flat result rows, CSV (12 significant digits, '.' decimal) and JSON lines,
// written atomically. Undefined and skipped gamma/beta1 cells hold the
// literal sentinels "undef" and "skip".

#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "greedy_certify/bounds.hpp"
#include "greedy_certify/value.hpp"
#include "json.hpp"

namespace greedy_certify {

struct Cell {
  enum class Kind { kNumber, kText };
  std::string text;
  Kind kind = Kind::kText;

  static Cell number(double v) { return {format_number(v), Kind::kNumber}; }
  static Cell integer(std::uint64_t v) { return {std::to_string(v), Kind::kNumber}; }
  static Cell str(std::string s) { return {std::move(s), Kind::kText}; }

  static std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
  }
};

using Row = std::vector<std::pair<std::string, Cell>>;

inline const char* sentinel(Availability a) {
  return a == Availability::kSkipped ? "skip" : "undef";
}

inline Cell gamma_cell(const GammaValue<double>& g) {
  return g.defined() ? Cell::number(g.value) : Cell::str(sentinel(g.status));
}

inline Cell beta1_cell(const GammaValue<double>& g, const std::optional<double>& b) {
  if (b) return Cell::number(*b);
  return Cell::str(g.status == Availability::kSkipped ? "skip" : "undef");
}

// K, ground_size, f_GK, f_g1, B_s, gamma_G, gamma_Gpp, beta0, beta1_G,
// beta1_Gpp, beta2, then f_opt and ratio when requested.
inline void append_bound_columns(Row& row, const BoundReport<double>& b, bool with_opt = false) {
  row.emplace_back("K", Cell::integer(b.horizon));
  row.emplace_back("ground_size", Cell::integer(b.ground_size));
  row.emplace_back("f_GK", Cell::number(b.f_GK));
  row.emplace_back("f_g1", Cell::number(b.f_g1));
  row.emplace_back("B_s", Cell::number(b.B_s));
  row.emplace_back("gamma_G", gamma_cell(b.gamma_G));
  row.emplace_back("gamma_Gpp", gamma_cell(b.gamma_Gpp));
  row.emplace_back("beta0", Cell::number(b.beta0));
  row.emplace_back("beta1_G", beta1_cell(b.gamma_G, b.beta1_G));
  row.emplace_back("beta1_Gpp", beta1_cell(b.gamma_Gpp, b.beta1_Gpp));
  row.emplace_back("beta2", Cell::number(b.beta2));
  if (with_opt) {
    row.emplace_back("f_opt", b.f_opt ? Cell::number(*b.f_opt) : Cell::str("undef"));
    row.emplace_back("ratio", b.ratio ? Cell::number(*b.ratio) : Cell::str("undef"));
  }
}

// Exact values as rows: rationals go through double for the CSV.
inline BoundReport<double> to_double_report(const BoundReport<Rational>& r) {
  auto g = [](const GammaValue<Rational>& in) {
    GammaValue<double> out;
    out.status = in.status;
    out.value = to_double(in.value);
    out.epoch = in.epoch;
    out.symbol = in.symbol;
    out.base = in.base;
    out.increment = to_double(in.increment);
    out.reason = in.reason;
    return out;
  };
  auto opt = [](const std::optional<Rational>& v) -> std::optional<double> {
    if (!v) return std::nullopt;
    return to_double(*v);
  };
  BoundReport<double> d;
  d.horizon = r.horizon;
  d.ground_size = r.ground_size;
  d.f_GK = to_double(r.f_GK);
  d.f_g1 = to_double(r.f_g1);
  d.B_s = to_double(r.B_s);
  for (const auto& c : r.epoch_maxima) d.epoch_maxima.push_back(to_double(c));
  d.gamma_G = g(r.gamma_G);
  d.gamma_Gpp = g(r.gamma_Gpp);
  d.beta0 = r.beta0;
  d.beta1_G = opt(r.beta1_G);
  d.beta1_Gpp = opt(r.beta1_Gpp);
  d.beta2 = to_double(r.beta2);
  d.f_opt = opt(r.f_opt);
  d.ratio = opt(r.ratio);
  return d;
}

class Table {
 public:
  // Every row must carry the same columns in the same order.
  void add(Row row) {
    if (!rows_.empty()) {
      const Row& first = rows_.front();
      bool same = first.size() == row.size();
      for (std::size_t i = 0; same && i < row.size(); ++i) same = first[i].first == row[i].first;
      if (!same) throw std::logic_error("row columns differ from the table header");
    }
    rows_.push_back(std::move(row));
  }

  const std::vector<Row>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }

  std::string to_csv() const {
    std::string out;
    if (rows_.empty()) return out;
    for (std::size_t i = 0; i < rows_.front().size(); ++i) {
      if (i) out += ',';
      out += escape(rows_.front()[i].first);
    }
    out += '\n';
    for (const Row& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += escape(row[i].second.text);
      }
      out += '\n';
    }
    return out;
  }

  std::string to_json_lines() const {
    std::string out;
    for (const Row& row : rows_) {
      nlohmann::ordered_json j;
      for (const auto& [name, cell] : row) {
        if (cell.kind == Cell::Kind::kNumber) {
          j[name] = nlohmann::ordered_json::parse(cell.text);
        } else {
          j[name] = cell.text;
        }
      }
      out += j.dump();
      out += '\n';
    }
    return out;
  }

 private:
  static std::string escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }

  std::vector<Row> rows_;
};

// Writes to a sibling temporary file, then renames over the target.
inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace greedy_certify
