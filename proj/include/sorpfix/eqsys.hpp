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

#ifndef SORPFIX_EQSYS_HPP
#define SORPFIX_EQSYS_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semiring.hpp"
#include "sorp.hpp"

namespace sorpfix {

/// Carries every violation found while checking a system or a document, so
/// callers can report all of them at once.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> issues)
      : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

  const std::vector<std::string>& issues() const { return issues_; }

 private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string message = "validation failed:";
    for (const std::string& issue : issues) message += "\n  - " + issue;
    return message;
  }

  std::vector<std::string> issues_;
};

enum class FixpointKind { least, greatest };

/// Monomial of an equation right-hand side: finite positive exponents only.
/// The empty monomial stands for an absolute coefficient.
class SysMonomial {
 public:
  SysMonomial() = default;

  explicit SysMonomial(std::map<std::string, std::uint64_t> exponents)
      : exponents_(std::move(exponents)) {
    for (const auto& [name, exponent] : exponents_)
      if (exponent == 0)
        throw std::invalid_argument("system monomial exponent of '" + name + "' must be >= 1");
  }

  bool is_constant() const { return exponents_.empty(); }
  const std::map<std::string, std::uint64_t>& exponents() const { return exponents_; }

  std::uint64_t exponent_of(const std::string& name) const {
    const auto it = exponents_.find(name);
    return it == exponents_.end() ? 0 : it->second;
  }

  Monomial to_sorp_monomial() const {
    std::map<std::string, Exponent> factors;
    for (const auto& [name, exponent] : exponents_) factors.emplace(name, exponent);
    return Monomial(std::move(factors));
  }

  std::string to_string() const { return to_sorp_monomial().to_string(); }

  friend bool operator==(const SysMonomial&, const SysMonomial&) = default;
  friend bool operator<(const SysMonomial& a, const SysMonomial& b) {
    return a.exponents_ < b.exponents_;
  }

 private:
  std::map<std::string, std::uint64_t> exponents_;
};

/// Total assignment of semiring values to the system's indeterminates.
template <Semiring S>
using Valuation = std::map<std::string, value_t<S>>;

template <Semiring S>
struct SysTerm {
  value_t<S> coeff;
  SysMonomial monomial;
};

/// Finite formal sum of coefficient-monomial pairs. The empty polynomial is
/// the constant 0. Invariants (nonzero coefficients, distinct monomials) are
/// enforced by EquationSystem, which knows the semiring.
template <Semiring S>
class SysPolynomial {
 public:
  SysPolynomial() = default;
  explicit SysPolynomial(std::vector<SysTerm<S>> terms) : terms_(std::move(terms)) {}

  const std::vector<SysTerm<S>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  value_t<S> evaluate(const S& s, const Valuation<S>& v) const {
    value_t<S> sum = s.zero();
    for (const SysTerm<S>& term : terms_) {
      value_t<S> product = term.coeff;
      for (const auto& [name, exponent] : term.monomial.exponents()) {
        const auto it = v.find(name);
        if (it == v.end())
          throw std::invalid_argument("valuation misses indeterminate '" + name + "'");
        product = s.mul(product, pow(s, it->second, exponent));
      }
      sum = s.add(sum, product);
    }
    return sum;
  }

 private:
  std::vector<SysTerm<S>> terms_;
};

/// Polynomial equation system X_i = P_i over a fixed semiring, one equation
/// per indeterminate. Immutable; safe to solve concurrently.
template <Semiring S>
class EquationSystem {
 public:
  EquationSystem(S semiring, std::vector<std::string> names,
                 std::vector<SysPolynomial<S>> right_hand_sides)
      : semiring_(std::move(semiring)),
        names_(std::move(names)),
        rhs_(std::move(right_hand_sides)) {
    std::vector<std::string> issues;
    std::set<std::string> declared;
    for (const std::string& name : names_) {
      if (!is_identifier(name)) issues.push_back("indeterminate name '" + name + "' is not an identifier");
      if (!declared.insert(name).second) issues.push_back("duplicate indeterminate '" + name + "'");
    }
    if (rhs_.size() != names_.size()) {
      issues.push_back("expected one equation per indeterminate, got " +
                       std::to_string(rhs_.size()) + " equations for " +
                       std::to_string(names_.size()) + " indeterminates");
    } else {
      for (std::size_t i = 0; i < names_.size(); ++i) {
        std::set<SysMonomial> seen;
        for (const SysTerm<S>& term : rhs_[i].terms()) {
          if (semiring_.equals(term.coeff, semiring_.zero()))
            issues.push_back("equation " + names_[i] + ": coefficient of " +
                             term.monomial.to_string() + " is the semiring zero");
          if (!seen.insert(term.monomial).second)
            issues.push_back("equation " + names_[i] + ": duplicate monomial " +
                             term.monomial.to_string());
          for (const auto& [name, exponent] : term.monomial.exponents())
            if (!declared.count(name))
              issues.push_back("equation " + names_[i] + ": undeclared indeterminate '" + name +
                               "'");
        }
      }
    }
    if (!issues.empty()) throw ValidationError(std::move(issues));
  }

  const S& semiring() const { return semiring_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }

  const SysPolynomial<S>& rhs(std::size_t index) const { return rhs_.at(index); }
  const SysPolynomial<S>& rhs(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return rhs_[i];
    throw std::invalid_argument("no equation for indeterminate '" + name + "'");
  }

 private:
  S semiring_;
  std::vector<std::string> names_;
  std::vector<SysPolynomial<S>> rhs_;
};

template <Semiring S>
bool systems_equal(const EquationSystem<S>& a, const EquationSystem<S>& b) {
  if (a.names() != b.names()) return false;
  const S& s = a.semiring();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& ta = a.rhs(i).terms();
    const auto& tb = b.rhs(i).terms();
    if (ta.size() != tb.size()) return false;
    for (std::size_t j = 0; j < ta.size(); ++j)
      if (!(ta[j].monomial == tb[j].monomial) || !s.equals(ta[j].coeff, tb[j].coeff))
        return false;
  }
  return true;
}

template <Semiring S>
Valuation<S> constant_valuation(const EquationSystem<S>& system, const value_t<S>& value) {
  Valuation<S> v;
  for (const std::string& name : system.names()) v.emplace(name, value);
  return v;
}

template <Semiring S>
Valuation<S> zero_valuation(const EquationSystem<S>& system) {
  return constant_valuation(system, system.semiring().zero());
}

template <Semiring S>
Valuation<S> one_valuation(const EquationSystem<S>& system) {
  return constant_valuation(system, system.semiring().one());
}

template <Semiring S>
bool valuation_equal(const S& s, const Valuation<S>& a, const Valuation<S>& b) {
  if (a.size() != b.size()) return false;
  auto it = b.begin();
  for (const auto& [name, value] : a) {
    if (it->first != name || !s.equals(value, it->second)) return false;
    ++it;
  }
  return true;
}

/// Componentwise natural order.
template <Semiring S>
bool valuation_leq(const S& s, const Valuation<S>& a, const Valuation<S>& b) {
  if (a.size() != b.size()) return false;
  auto it = b.begin();
  for (const auto& [name, value] : a) {
    if (it->first != name || !natural_leq(s, value, it->second)) return false;
    ++it;
  }
  return true;
}

template <Semiring S>
Valuation<S> valuation_inf_pow(const S& s, Valuation<S> v) {
  for (auto& [name, value] : v) value = s.inf_pow(value);
  return v;
}

/// One application of the induced operator F: component X becomes P_X(v).
/// Monotone in v with respect to the componentwise natural order.
template <Semiring S>
Valuation<S> apply_operator(const EquationSystem<S>& system, const Valuation<S>& v) {
  for (const std::string& name : system.names())
    if (!v.count(name))
      throw std::invalid_argument("valuation misses indeterminate '" + name + "'");
  Valuation<S> out;
  for (std::size_t i = 0; i < system.size(); ++i)
    out.emplace(system.names()[i], system.rhs(i).evaluate(system.semiring(), v));
  return out;
}

template <Semiring S>
Valuation<S> iterate_operator(const EquationSystem<S>& system, Valuation<S> v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) v = apply_operator(system, v);
  return v;
}

/// Least solution in closed form: F^l(0) with l the number of
/// indeterminates; no early-exit optimization is attempted.
template <Semiring S>
Valuation<S> solve_lfp_closed(const EquationSystem<S>& system) {
  return iterate_operator(system, zero_valuation(system), system.size());
}

/// Greatest solution in closed form: F^l applied to the componentwise
/// infinitary power of F^l(1).
template <Semiring S>
Valuation<S> solve_gfp_closed(const EquationSystem<S>& system) {
  const std::size_t l = system.size();
  Valuation<S> inner = iterate_operator(system, one_valuation(system), l);
  return iterate_operator(system, valuation_inf_pow(system.semiring(), std::move(inner)), l);
}

enum class StartVector { zero, one };

template <Semiring S>
struct KleeneResult {
  Valuation<S> valuation;
  bool converged = false;
  std::size_t steps = 0;
};

/// Plain fixed-point iteration with an explicit step cap. Starting from the
/// all-one vector the descending iteration may never stabilize, so
/// non-convergence is reported honestly instead of looping.
template <Semiring S>
KleeneResult<S> kleene_iterate(const EquationSystem<S>& system, StartVector start,
                               std::size_t max_steps) {
  const S& s = system.semiring();
  Valuation<S> current =
      start == StartVector::zero ? zero_valuation(system) : one_valuation(system);
  for (std::size_t step = 1; step <= max_steps; ++step) {
    Valuation<S> next = apply_operator(system, current);
    if (valuation_equal(s, current, next)) return {std::move(next), true, step};
    current = std::move(next);
  }
  return {std::move(current), false, max_steps};
}

namespace detail {

/// Deterministic fresh-name supply: a1, a2, ... with underscores appended
/// until the name avoids everything in `taken`.
inline std::string next_fresh_name(std::set<std::string>& taken, std::size_t& counter) {
  std::string candidate = "a" + std::to_string(++counter);
  while (taken.count(candidate)) candidate += "_";
  taken.insert(candidate);
  return candidate;
}

}  // namespace detail

template <Semiring S>
struct SystemAbstraction {
  EquationSystem<SorpSemiring> system;
  /// Maps each fresh coefficient indeterminate back to the value it replaced.
  std::map<std::string, value_t<S>> instantiation;
};

/// Replaces every coefficient occurrence with a fresh indeterminate, one per
/// (equation, monomial) pair even when values coincide, so the abstraction
/// never depends on coefficient equality. Mapping the abstract system back
/// through the instantiation recovers the input exactly.
template <Semiring S>
SystemAbstraction<S> symbolic_abstraction(const EquationSystem<S>& system) {
  std::set<std::string> taken(system.names().begin(), system.names().end());
  std::size_t counter = 0;
  std::map<std::string, value_t<S>> instantiation;
  std::vector<SysPolynomial<SorpSemiring>> rhs;
  for (std::size_t i = 0; i < system.size(); ++i) {
    std::vector<SysTerm<SorpSemiring>> terms;
    for (const SysTerm<S>& term : system.rhs(i).terms()) {
      const std::string fresh = detail::next_fresh_name(taken, counter);
      terms.push_back({SorpPolynomial::indeterminate(fresh), term.monomial});
      instantiation.emplace(fresh, term.coeff);
    }
    rhs.emplace_back(std::move(terms));
  }
  return {EquationSystem<SorpSemiring>(SorpSemiring{}, system.names(), std::move(rhs)),
          std::move(instantiation)};
}

/// Applies a coefficient assignment to a system over absorptive polynomials,
/// yielding a system over the target semiring. Pairs whose coefficient
/// evaluates to zero are dropped; monomials that collide afterwards are
/// merged by semiring addition.
template <Semiring S>
EquationSystem<S> map_system(const EquationSystem<SorpSemiring>& system, const S& target,
                             const std::map<std::string, value_t<S>>& assignment) {
  std::vector<SysPolynomial<S>> rhs;
  for (std::size_t i = 0; i < system.size(); ++i) {
    std::vector<SysTerm<S>> terms;
    for (const SysTerm<SorpSemiring>& term : system.rhs(i).terms()) {
      value_t<S> coeff = term.coeff.evaluate(target, assignment);
      if (target.equals(coeff, target.zero())) continue;
      bool merged = false;
      for (SysTerm<S>& existing : terms) {
        if (existing.monomial == term.monomial) {
          existing.coeff = target.add(existing.coeff, coeff);
          merged = true;
          break;
        }
      }
      if (!merged) terms.push_back({std::move(coeff), term.monomial});
    }
    rhs.emplace_back(std::move(terms));
  }
  return EquationSystem<S>(target, system.names(), std::move(rhs));
}

}  // namespace sorpfix

#endif  // SORPFIX_EQSYS_HPP
