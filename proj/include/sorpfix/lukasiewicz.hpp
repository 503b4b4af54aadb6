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

#ifndef SORPFIX_LUKASIEWICZ_HPP
#define SORPFIX_LUKASIEWICZ_HPP

#include <string>
#include <utility>

#include "rational.hpp"
#include "semiring.hpp"

namespace sorpfix {

/// Many-valued truth degree: an exact rational in [0, 1].
class LukasiewiczValue {
 public:
  LukasiewiczValue() = default;  // 0

  explicit LukasiewiczValue(Rational degree) : degree_(std::move(degree)) {
    if (degree_ < 0 || degree_ > 1)
      throw std::invalid_argument("Lukasiewicz values live in [0,1], got " +
                                  rational_to_string(degree_));
  }

  const Rational& degree() const { return degree_; }

  friend bool operator==(const LukasiewiczValue&, const LukasiewiczValue&) = default;

 private:
  Rational degree_;
};

/// ([0,1], max, a*b = max(0, a+b-1)), as used in many-valued logics.
class Lukasiewicz {
 public:
  using value_type = LukasiewiczValue;

  value_type zero() const { return LukasiewiczValue(Rational(0)); }
  value_type one() const { return LukasiewiczValue(Rational(1)); }

  value_type add(const value_type& a, const value_type& b) const {
    return a.degree() >= b.degree() ? a : b;
  }

  value_type mul(const value_type& a, const value_type& b) const {
    Rational sum = a.degree() + b.degree() - 1;
    return sum > 0 ? LukasiewiczValue(sum) : zero();
  }

  value_type inf_pow(const value_type& a) const {
    return a.degree() == 1 ? a : zero();
  }

  bool equals(const value_type& a, const value_type& b) const { return a == b; }

  std::string to_string(const value_type& a) const { return rational_to_string(a.degree()); }

  value_type parse(std::string_view text) const {
    return LukasiewiczValue(parse_rational(text));
  }

  std::string name() const { return "lukasiewicz"; }
};

static_assert(Semiring<Lukasiewicz>);

}  // namespace sorpfix

#endif  // SORPFIX_LUKASIEWICZ_HPP
