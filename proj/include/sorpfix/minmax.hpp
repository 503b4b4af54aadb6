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

#ifndef SORPFIX_MINMAX_HPP
#define SORPFIX_MINMAX_HPP

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "semiring.hpp"

namespace sorpfix {

/// User-declared finite totally ordered carrier, least element first.
class MinMaxChain {
 public:
  explicit MinMaxChain(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() < 2)
      throw std::invalid_argument("a min-max chain needs at least two labels (0 != 1)");
    for (std::size_t i = 0; i < labels_.size(); ++i)
      for (std::size_t j = i + 1; j < labels_.size(); ++j)
        if (labels_[i] == labels_[j])
          throw std::invalid_argument("duplicate min-max chain label '" + labels_[i] + "'");
  }

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t index) const { return labels_.at(index); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::size_t index_of(std::string_view label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
      throw std::invalid_argument("label '" + std::string(label) + "' is not on the chain");
    return static_cast<std::size_t>(it - labels_.begin());
  }

  friend bool operator==(const MinMaxChain&, const MinMaxChain&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Position on a chain. Values remember their chain so that operands from
/// different chains are rejected instead of being silently compared by index.
class MinMaxValue {
 public:
  MinMaxValue(std::shared_ptr<const MinMaxChain> chain, std::size_t index)
      : chain_(std::move(chain)), index_(index) {
    if (index_ >= chain_->size()) throw std::invalid_argument("chain index out of range");
  }

  std::size_t index() const { return index_; }
  const std::string& label() const { return chain_->label(index_); }
  const MinMaxChain& chain() const { return *chain_; }

 private:
  std::shared_ptr<const MinMaxChain> chain_;
  std::size_t index_;
};

/// (A, max, min) on a finite totally ordered set; zero is the least label,
/// one the greatest.
class MinMax {
 public:
  using value_type = MinMaxValue;

  explicit MinMax(std::vector<std::string> labels)
      : chain_(std::make_shared<const MinMaxChain>(std::move(labels))) {}

  value_type zero() const { return {chain_, 0}; }
  value_type one() const { return {chain_, chain_->size() - 1}; }

  value_type add(const value_type& a, const value_type& b) const {
    check(a, b);
    return a.index() >= b.index() ? a : b;
  }

  value_type mul(const value_type& a, const value_type& b) const {
    check(a, b);
    return a.index() <= b.index() ? a : b;
  }

  value_type inf_pow(const value_type& a) const {
    check(a);
    return a;
  }

  bool equals(const value_type& a, const value_type& b) const {
    check(a, b);
    return a.index() == b.index();
  }

  std::string to_string(const value_type& a) const { return a.label(); }

  value_type from_label(std::string_view label) const {
    return {chain_, chain_->index_of(label)};
  }

  std::vector<value_type> carrier() const {
    std::vector<value_type> all;
    for (std::size_t i = 0; i < chain_->size(); ++i) all.emplace_back(chain_, i);
    return all;
  }

  const MinMaxChain& chain() const { return *chain_; }

  std::string name() const { return "minmax"; }

 private:
  void check(const value_type& a) const {
    if (!(a.chain() == *chain_))
      throw MixedSemiringError("min-max value belongs to a different chain");
  }
  void check(const value_type& a, const value_type& b) const {
    check(a);
    check(b);
  }

  std::shared_ptr<const MinMaxChain> chain_;
};

static_assert(FiniteSemiring<MinMax>);

}  // namespace sorpfix

#endif  // SORPFIX_MINMAX_HPP
