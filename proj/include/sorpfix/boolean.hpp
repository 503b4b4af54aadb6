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

#ifndef SORPFIX_BOOLEAN_HPP
#define SORPFIX_BOOLEAN_HPP

#include <string>
#include <vector>

#include "semiring.hpp"

namespace sorpfix {

/// ({0,1}, or, and), plain logical truth.
class Boolean {
 public:
  using value_type = bool;

  value_type zero() const { return false; }
  value_type one() const { return true; }
  value_type add(value_type a, value_type b) const { return a || b; }
  value_type mul(value_type a, value_type b) const { return a && b; }
  value_type inf_pow(value_type a) const { return a; }
  bool equals(value_type a, value_type b) const { return a == b; }
  std::string to_string(value_type a) const { return a ? "true" : "false"; }
  std::vector<value_type> carrier() const { return {false, true}; }
  std::string name() const { return "boolean"; }
};

static_assert(FiniteSemiring<Boolean>);

}  // namespace sorpfix

#endif  // SORPFIX_BOOLEAN_HPP
