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

#ifndef SORPFIX_SEMIRING_HPP
#define SORPFIX_SEMIRING_HPP

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sorpfix {

/// Thrown when values of two distinct semiring instances meet in one
/// operation. Distinct semiring *types* already fail to compile; this error
/// covers semirings with per-instance state, such as min-max chains.
class MixedSemiringError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An absorptive, fully-continuous commutative semiring, presented as an
/// algebra object over an immutable value type.
///
/// Contract beyond the usual semiring axioms:
///  - absorption: one() + a == one() for every a; hence addition is
///    idempotent and multiplication is decreasing,
///  - the natural order (a <= b iff a + b == b) is a complete lattice on the
///    carrier, and add/mul commute with suprema and infima of nonempty
///    chains,
///  - inf_pow(a) equals the infimum of the descending power chain
///    1 >= a >= a^2 >= ...
///
/// Continuity and the chain infimum quantify over infinite data; they are a
/// documented obligation on implementations, which the test suite checks on
/// finite chain prefixes.
template <typename S>
concept Semiring =
    std::copyable<S> && std::copyable<typename S::value_type> &&
    requires(const S s, const typename S::value_type& a, const typename S::value_type& b) {
      { s.zero() } -> std::same_as<typename S::value_type>;
      { s.one() } -> std::same_as<typename S::value_type>;
      { s.add(a, b) } -> std::same_as<typename S::value_type>;
      { s.mul(a, b) } -> std::same_as<typename S::value_type>;
      { s.inf_pow(a) } -> std::same_as<typename S::value_type>;
      { s.equals(a, b) } -> std::same_as<bool>;
      { s.to_string(a) } -> std::same_as<std::string>;
      { s.name() } -> std::same_as<std::string>;
    };

/// Semirings whose whole carrier can be enumerated; required by the
/// brute-force fixed-point oracle.
template <typename S>
concept FiniteSemiring = Semiring<S> && requires(const S s) {
  { s.carrier() } -> std::same_as<std::vector<typename S::value_type>>;
};

template <Semiring S>
using value_t = typename S::value_type;

/// Natural order of an idempotent semiring: a <= b iff a + b = b.
template <Semiring S>
bool natural_leq(const S& s, const value_t<S>& a, const value_t<S>& b) {
  return s.equals(s.add(a, b), b);
}

/// n-fold product with pow(a, 0) = 1, by squaring.
template <Semiring S>
value_t<S> pow(const S& s, value_t<S> base, std::uint64_t n) {
  value_t<S> acc = s.one();
  while (n > 0) {
    if (n & 1) acc = s.mul(acc, base);
    n >>= 1;
    if (n) base = s.mul(base, base);
  }
  return acc;
}

/// Indeterminate names follow identifier syntax so that rendered polynomials
/// and equation documents stay unambiguous.
inline bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  const auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  const auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); };
  if (!alpha(name.front())) return false;
  for (const char c : name.substr(1))
    if (!alnum(c)) return false;
  return true;
}

}  // namespace sorpfix

#endif  // SORPFIX_SEMIRING_HPP
