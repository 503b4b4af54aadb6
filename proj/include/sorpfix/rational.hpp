/*
 * Copyright 2026 The sorpfix authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SORPFIX_RATIONAL_HPP
#define SORPFIX_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sorpfix {

/// Exact arbitrary-precision rational. Fixed-point detection relies on
/// decidable equality, so floating point is not used anywhere.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "20", "1/3" or a decimal literal such as "0.25" into an exact
/// rational. Throws std::invalid_argument on anything else.
inline Rational parse_rational(std::string_view text) {
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '-') {
    negative = true;
    ++pos;
  }
  const auto digits = [&](std::size_t& i) -> std::string_view {
    const std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == start) fail();
    return text.substr(start, i - start);
  };
  using boost::multiprecision::cpp_int;
  cpp_int numerator{std::string(digits(pos))};
  cpp_int denominator = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    denominator = cpp_int{std::string(digits(pos))};
    if (denominator == 0) fail();
  } else if (pos < text.size() && text[pos] == '.') {
    ++pos;
    for (const char c : digits(pos)) {
      numerator = numerator * 10 + (c - '0');
      denominator *= 10;
    }
  }
  if (pos != text.size()) fail();
  Rational value{numerator, denominator};
  return negative ? Rational(-value) : value;
}

/// Canonical rendering: integers without a denominator, everything else as
/// "numerator/denominator" in lowest terms.
inline std::string rational_to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace sorpfix

#endif  // SORPFIX_RATIONAL_HPP
