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

#ifndef SORPFIX_TROPICAL_HPP
#define SORPFIX_TROPICAL_HPP

#include <string>
#include <utility>

#include "rational.hpp"
#include "semiring.hpp"

namespace sorpfix {

/// Cost value of the tropical semiring: a nonnegative exact rational or
/// infinity. Infinity is the semiring zero (identity of min), the rational 0
/// is the semiring one. The natural order is the reverse of the numeric one.
class TropicalValue {
 public:
  TropicalValue() = default;  // infinity

  static TropicalValue infinity() { return TropicalValue(); }

  static TropicalValue finite(Rational cost) {
    if (cost < 0)
      throw std::invalid_argument("tropical values must be nonnegative, got " +
                                  rational_to_string(cost));
    TropicalValue v;
    v.finite_ = true;
    v.cost_ = std::move(cost);
    return v;
  }

  bool is_infinite() const { return !finite_; }

  /// Precondition: !is_infinite().
  const Rational& cost() const { return cost_; }

  friend bool operator==(const TropicalValue&, const TropicalValue&) = default;

 private:
  bool finite_ = false;
  Rational cost_;  // meaningful only when finite_
};

/// (R>=0 with infinity, min, +). Used for cost computations; the least
/// element of the natural order is infinity, the greatest is 0.
class Tropical {
 public:
  using value_type = TropicalValue;

  value_type zero() const { return TropicalValue::infinity(); }
  value_type one() const { return TropicalValue::finite(0); }

  value_type add(const value_type& a, const value_type& b) const {
    if (a.is_infinite()) return b;
    if (b.is_infinite()) return a;
    return a.cost() <= b.cost() ? a : b;
  }

  value_type mul(const value_type& a, const value_type& b) const {
    if (a.is_infinite() || b.is_infinite()) return zero();
    return TropicalValue::finite(a.cost() + b.cost());
  }

  /// 0^inf = 0, everything else descends to infinity.
  value_type inf_pow(const value_type& a) const {
    if (!a.is_infinite() && a.cost() == 0) return a;
    return zero();
  }

  bool equals(const value_type& a, const value_type& b) const { return a == b; }

  std::string to_string(const value_type& a) const {
    return a.is_infinite() ? "inf" : rational_to_string(a.cost());
  }

  value_type parse(std::string_view text) const {
    if (text == "inf") return zero();
    return TropicalValue::finite(parse_rational(text));
  }

  std::string name() const { return "tropical"; }
};

static_assert(Semiring<Tropical>);

}  // namespace sorpfix

#endif  // SORPFIX_TROPICAL_HPP
