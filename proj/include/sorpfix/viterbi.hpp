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

#ifndef SORPFIX_VITERBI_HPP
#define SORPFIX_VITERBI_HPP

#include <string>
#include <utility>

#include "rational.hpp"
#include "semiring.hpp"

namespace sorpfix {

/// Confidence score: an exact rational in [0, 1].
class ViterbiValue {
 public:
  ViterbiValue() = default;  // 0

  explicit ViterbiValue(Rational score) : score_(std::move(score)) {
    if (score_ < 0 || score_ > 1)
      throw std::invalid_argument("Viterbi values live in [0,1], got " +
                                  rational_to_string(score_));
  }

  const Rational& score() const { return score_; }

  friend bool operator==(const ViterbiValue&, const ViterbiValue&) = default;

 private:
  Rational score_;
};

/// ([0,1], max, *), the confidence-score semiring.
class Viterbi {
 public:
  using value_type = ViterbiValue;

  value_type zero() const { return ViterbiValue(Rational(0)); }
  value_type one() const { return ViterbiValue(Rational(1)); }

  value_type add(const value_type& a, const value_type& b) const {
    return a.score() >= b.score() ? a : b;
  }

  value_type mul(const value_type& a, const value_type& b) const {
    return ViterbiValue(a.score() * b.score());
  }

  value_type inf_pow(const value_type& a) const {
    return a.score() == 1 ? a : zero();
  }

  bool equals(const value_type& a, const value_type& b) const { return a == b; }

  std::string to_string(const value_type& a) const { return rational_to_string(a.score()); }

  value_type parse(std::string_view text) const { return ViterbiValue(parse_rational(text)); }

  std::string name() const { return "viterbi"; }
};

static_assert(Semiring<Viterbi>);

}  // namespace sorpfix

#endif  // SORPFIX_VITERBI_HPP
