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

#ifndef SORPFIX_SORP_HPP
#define SORPFIX_SORP_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semiring.hpp"

namespace sorpfix {

/// Exponent in the extended naturals: a finite count or infinity.
/// Addition saturates at infinity; infinitize sends 0 to 0 and every
/// positive exponent to infinity.
class Exponent {
 public:
  constexpr Exponent() = default;
  constexpr Exponent(std::uint64_t n) : value_(n) {}  // NOLINT: implicit by design

  static constexpr Exponent infinity() {
    Exponent e;
    e.value_ = kInfinity;
    return e;
  }

  constexpr bool is_infinite() const { return value_ == kInfinity; }
  constexpr bool is_zero() const { return value_ == 0; }

  /// Precondition: !is_infinite().
  constexpr std::uint64_t finite_value() const { return value_; }

  friend constexpr Exponent operator+(Exponent a, Exponent b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    if (a.value_ > kInfinity - 1 - b.value_) return infinity();  // saturate
    return Exponent(a.value_ + b.value_);
  }

  constexpr Exponent infinitize() const { return is_zero() ? Exponent(0) : infinity(); }

  // The sentinel is the largest representable value, so the numeric order
  // already places infinity above every finite exponent.
  friend constexpr auto operator<=>(Exponent, Exponent) = default;

 private:
  static constexpr std::uint64_t kInfinity = ~std::uint64_t{0};
  std::uint64_t value_ = 0;
};

inline std::string to_string(Exponent e) {
  return e.is_infinite() ? "inf" : std::to_string(e.finite_value());
}

/// Product of indeterminate powers, stored as name -> exponent with zero
/// exponents elided. The neutral monomial is the empty map; multiplication
/// adds exponents.
class Monomial {
 public:
  Monomial() = default;  // the neutral monomial 1

  Monomial(std::initializer_list<std::pair<const std::string, Exponent>> factors) {
    for (const auto& [name, exponent] : factors)
      if (!exponent.is_zero()) factors_.insert_or_assign(name, exponent);
  }

  explicit Monomial(std::map<std::string, Exponent> factors) {
    for (auto& [name, exponent] : factors)
      if (!exponent.is_zero()) factors_.insert_or_assign(name, exponent);
  }

  static Monomial indeterminate(const std::string& name) { return Monomial{{name, 1}}; }

  bool is_neutral() const { return factors_.empty(); }

  Exponent exponent_of(const std::string& name) const {
    const auto it = factors_.find(name);
    return it == factors_.end() ? Exponent(0) : it->second;
  }

  const std::map<std::string, Exponent>& factors() const { return factors_; }

  Monomial times(const Monomial& other) const {
    Monomial product = *this;
    for (const auto& [name, exponent] : other.factors_) {
      const auto [it, inserted] = product.factors_.try_emplace(name, exponent);
      if (!inserted) it->second = it->second + exponent;
    }
    return product;
  }

  Monomial infinitize() const {
    Monomial result;
    for (const auto& [name, exponent] : factors_)
      result.factors_.emplace(name, exponent.infinitize());
    return result;
  }

  /// Partial derivative of a single monomial: the occurrence of `name` is
  /// dropped once for finite exponents, kept as-is for infinite ones, and the
  /// whole monomial vanishes when `name` does not occur. (Expanding the
  /// inductive product rule over a monomial and collapsing the idempotent sum
  /// yields exactly this; the test suite checks against that expansion.)
  std::optional<Monomial> derivative(const std::string& name) const {
    const Exponent e = exponent_of(name);
    if (e.is_zero()) return std::nullopt;
    if (e.is_infinite()) return *this;
    Monomial result = *this;
    if (e.finite_value() == 1)
      result.factors_.erase(name);
    else
      result.factors_.insert_or_assign(name, Exponent(e.finite_value() - 1));
    return result;
  }

  std::string to_string() const {
    if (is_neutral()) return "1";
    std::string out;
    for (const auto& [name, exponent] : factors_) {
      if (!out.empty()) out += "*";
      out += name;
      if (exponent.is_infinite())
        out += "^inf";
      else if (exponent.finite_value() != 1)
        out += "^" + std::to_string(exponent.finite_value());
    }
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.factors_ < b.factors_; }

 private:
  std::map<std::string, Exponent> factors_;
};

/// m1 absorbs m2 iff every exponent of m1 is <= the matching exponent of m2
/// (missing names count as 0). Note that absorption inverts the pointwise
/// exponent order.
inline bool absorbs(const Monomial& m1, const Monomial& m2) {
  for (const auto& [name, exponent] : m1.factors())
    if (!(exponent <= m2.exponent_of(name))) return false;
  return true;
}

/// Generalized absorptive polynomial: a canonical antichain of monomials
/// under the absorption order. 0 is the empty antichain, 1 is {neutral}.
/// Monomials are kept sorted (lexicographic by name, then exponent with
/// infinity greatest) and absorbed monomials are dropped eagerly after every
/// operation, so equal polynomials have identical representations.
class SorpPolynomial {
 public:
  SorpPolynomial() = default;  // zero

  static SorpPolynomial zero() { return SorpPolynomial(); }
  static SorpPolynomial one() { return monomial(Monomial()); }

  static SorpPolynomial monomial(Monomial m) {
    SorpPolynomial p;
    p.monomials_.push_back(std::move(m));
    return p;
  }

  static SorpPolynomial indeterminate(const std::string& name) {
    return monomial(Monomial::indeterminate(name));
  }

  /// The absorption-maximal elements of an arbitrary monomial set, in
  /// canonical order. Idempotent.
  static SorpPolynomial maximals(std::vector<Monomial> monomials) {
    std::sort(monomials.begin(), monomials.end());
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    SorpPolynomial result;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < monomials.size() && !dominated; ++j)
        dominated = i != j && absorbs(monomials[j], monomials[i]);
      if (!dominated) result.monomials_.push_back(monomials[i]);
    }
    return result;
  }

  bool is_zero() const { return monomials_.empty(); }
  bool is_one() const { return monomials_.size() == 1 && monomials_.front().is_neutral(); }

  const std::vector<Monomial>& monomials() const { return monomials_; }

  SorpPolynomial plus(const SorpPolynomial& other) const {
    std::vector<Monomial> merged = monomials_;
    merged.insert(merged.end(), other.monomials_.begin(), other.monomials_.end());
    return maximals(std::move(merged));
  }

  SorpPolynomial times(const SorpPolynomial& other) const {
    std::vector<Monomial> products;
    products.reserve(monomials_.size() * other.monomials_.size());
    for (const Monomial& m1 : monomials_)
      for (const Monomial& m2 : other.monomials_) products.push_back(m1.times(m2));
    return maximals(std::move(products));
  }

  /// P^inf: every monomial with its exponents infinitized. This is the
  /// monomial-wise form of the chain infimum, since the infinitary power
  /// distributes over polynomial sums.
  SorpPolynomial inf_power() const {
    std::vector<Monomial> result;
    result.reserve(monomials_.size());
    for (const Monomial& m : monomials_) result.push_back(m.infinitize());
    return maximals(std::move(result));
  }

  SorpPolynomial derivative(const std::string& name) const {
    std::vector<Monomial> result;
    for (const Monomial& m : monomials_)
      if (auto d = m.derivative(name)) result.push_back(std::move(*d));
    return maximals(std::move(result));
  }

  /// Evaluation inside the polynomial semiring itself: `name` becomes
  /// `replacement`, every other indeterminate stays.
  SorpPolynomial substitute(const std::string& name, const SorpPolynomial& replacement) const {
    SorpPolynomial result;
    for (const Monomial& m : monomials_) {
      const Exponent e = m.exponent_of(name);
      if (e.is_zero()) {
        result = result.plus(monomial(m));
        continue;
      }
      std::map<std::string, Exponent> rest = m.factors();
      rest.erase(name);
      const SorpPolynomial factor =
          e.is_infinite() ? replacement.inf_power() : power_of(replacement, e.finite_value());
      result = result.plus(monomial(Monomial(std::move(rest))).times(factor));
    }
    return result;
  }

  /// Polynomial evaluation into any semiring; exponent infinity is realized
  /// by the target's infinitary power. By the universal property of
  /// absorptive polynomials this is the unique fully-continuous homomorphism
  /// extending the assignment.
  template <Semiring S>
  value_t<S> evaluate(const S& s, const std::map<std::string, value_t<S>>& assignment) const {
    value_t<S> sum = s.zero();
    for (const Monomial& m : monomials_) {
      value_t<S> product = s.one();
      for (const auto& [name, exponent] : m.factors()) {
        const auto it = assignment.find(name);
        if (it == assignment.end())
          throw std::invalid_argument("no assignment for indeterminate '" + name + "'");
        product = s.mul(product, exponent.is_infinite()
                                     ? s.inf_pow(it->second)
                                     : pow(s, it->second, exponent.finite_value()));
      }
      sum = s.add(sum, product);
    }
    return sum;
  }

  std::set<std::string> indeterminates() const {
    std::set<std::string> names;
    for (const Monomial& m : monomials_)
      for (const auto& [name, exponent] : m.factors()) names.insert(name);
    return names;
  }

  bool mentions(const std::string& name) const {
    for (const Monomial& m : monomials_)
      if (!m.exponent_of(name).is_zero()) return true;
    return false;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const Monomial& m : monomials_) {
      if (!out.empty()) out += " + ";
      out += m.to_string();
    }
    return out;
  }

  friend bool operator==(const SorpPolynomial&, const SorpPolynomial&) = default;
  friend bool operator<(const SorpPolynomial& a, const SorpPolynomial& b) {
    return a.monomials_ < b.monomials_;
  }

 private:
  static SorpPolynomial power_of(SorpPolynomial base, std::uint64_t n) {
    SorpPolynomial acc = one();
    while (n > 0) {
      if (n & 1) acc = acc.times(base);
      n >>= 1;
      if (n) base = base.times(base);
    }
    return acc;
  }

  std::vector<Monomial> monomials_;
};

/// S^inf[X] is itself absorptive and fully continuous; this adapter lets all
/// generic solvers and the whole algebraic test suite run over polynomial
/// values.
class SorpSemiring {
 public:
  using value_type = SorpPolynomial;

  value_type zero() const { return SorpPolynomial::zero(); }
  value_type one() const { return SorpPolynomial::one(); }
  value_type add(const value_type& a, const value_type& b) const { return a.plus(b); }
  value_type mul(const value_type& a, const value_type& b) const { return a.times(b); }
  value_type inf_pow(const value_type& a) const { return a.inf_power(); }
  bool equals(const value_type& a, const value_type& b) const { return a == b; }
  std::string to_string(const value_type& a) const { return a.to_string(); }
  std::string name() const { return "sorp"; }
};

static_assert(Semiring<SorpSemiring>);

}  // namespace sorpfix

#endif  // SORPFIX_SORP_HPP
