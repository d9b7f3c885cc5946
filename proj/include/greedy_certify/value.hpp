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

// Objective value types. Everything above this header is templated on the
// value type V, which is either `double` or the exact `Rational`.
// ValueTraits<V> centralises the comparisons that need a tolerance for
// floating point and none for rationals.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <concepts>
#include <cstdio>
#include <cstdint>
#include <string>
#include <string_view>

#include "greedy_certify/errors.hpp"

namespace greedy_certify {

// Arbitrary precision, always kept in lowest terms.
using Rational = boost::multiprecision::cpp_rational;

template <class V>
struct ValueTraits;

template <>
struct ValueTraits<double> {
  static constexpr bool kExact = false;
  // Increments at or below this are treated as non-positive.
  static constexpr double kTolerance = 1e-12;

  static double from_int(std::int64_t v) { return static_cast<double>(v); }
  static double to_double(double v) { return v; }
  static bool is_positive(double v) { return v > kTolerance; }
  static bool leq(double a, double b) { return a <= b + kTolerance; }
  static bool equal(double a, double b) { return std::abs(a - b) <= kTolerance; }
  static bool is_zero(double v) { return std::abs(v) <= kTolerance; }

  static std::string format(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
  }

  // Accepts a decimal number or a fraction "p/q".
  static double parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string_view::npos) return std::stod(std::string(text));
      const double num = std::stod(std::string(text.substr(0, slash)));
      const double den = std::stod(std::string(text.substr(slash + 1)));
      if (den == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
      return num / den;
    } catch (const std::logic_error&) {
      throw FormatError("cannot parse value '" + std::string(text) + "'");
    }
  }
};

template <>
struct ValueTraits<Rational> {
  static constexpr bool kExact = true;

  static Rational from_int(std::int64_t v) { return Rational(v); }
  static double to_double(const Rational& v) { return v.convert_to<double>(); }
  static bool is_positive(const Rational& v) { return v > 0; }
  static bool leq(const Rational& a, const Rational& b) { return a <= b; }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
  static bool is_zero(const Rational& v) { return v == 0; }

  // "p/q", or "p" for integers.
  static std::string format(const Rational& v) { return v.str(); }

  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw FormatError("empty rational");
    if (s.find_first_of(".eE") != std::string::npos) {
      throw FormatError("rational values must be integers or 'p/q', got '" + s + "'");
    }
    try {
      Rational r(s);
      return r;
    } catch (const std::exception&) {
      throw FormatError("cannot parse rational '" + s + "'");
    }
  }
};

template <class V>
concept ObjectiveValue = requires(const V& a, const V& b) {
  { ValueTraits<V>::is_positive(a) } -> std::same_as<bool>;
  { ValueTraits<V>::leq(a, b) } -> std::same_as<bool>;
  { a + b } -> std::convertible_to<V>;
  { a - b } -> std::convertible_to<V>;
  { a / b } -> std::convertible_to<V>;
};

template <class V>
double to_double(const V& v) {
  return ValueTraits<V>::to_double(v);
}

template <class V>
std::string format_value(const V& v) {
  return ValueTraits<V>::format(v);
}

}  // namespace greedy_certify
