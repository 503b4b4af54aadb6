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

#ifndef SORPFIX_SYMBOLIC_HPP
#define SORPFIX_SYMBOLIC_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eqsys.hpp"
#include "sorp.hpp"

namespace sorpfix {

/// Equation system viewed entirely inside the polynomial semiring: every
/// right-hand side is one absorptive polynomial over the coefficient
/// indeterminates A and the solve-for indeterminates X. Unlike the
/// closed-form solver's systems, infinite exponents on solve-for
/// indeterminates are first-class here.
class SymbolicSystem {
 public:
  SymbolicSystem(std::vector<std::string> unknowns, std::map<std::string, SorpPolynomial> rhs)
      : unknowns_(std::move(unknowns)), rhs_(std::move(rhs)) {
    std::vector<std::string> issues;
    std::set<std::string> declared;
    for (const std::string& name : unknowns_) {
      if (!is_identifier(name)) issues.push_back("unknown '" + name + "' is not an identifier");
      if (!declared.insert(name).second) issues.push_back("duplicate unknown '" + name + "'");
    }
    for (const auto& [name, poly] : rhs_) {
      if (!declared.count(name)) issues.push_back("equation for undeclared unknown '" + name + "'");
      for (const std::string& occurring : poly.indeterminates())
        if (!declared.count(occurring)) coefficients_.insert(occurring);
    }
    for (const std::string& name : unknowns_)
      if (!rhs_.count(name)) issues.push_back("missing equation for unknown '" + name + "'");
    if (!issues.empty()) throw ValidationError(std::move(issues));
  }

  const std::vector<std::string>& unknowns() const { return unknowns_; }
  const SorpPolynomial& rhs(const std::string& name) const { return rhs_.at(name); }

  /// The coefficient indeterminates: every name occurring in a right-hand
  /// side that is not solved for. Disjoint from the unknowns by construction.
  const std::set<std::string>& coefficient_names() const { return coefficients_; }

 private:
  std::vector<std::string> unknowns_;
  std::map<std::string, SorpPolynomial> rhs_;
  std::set<std::string> coefficients_;
};

/// Least solution of the single equation X = P(X): the absolute part P(0).
inline SorpPolynomial solve_one_lfp(const SorpPolynomial& p, const std::string& x) {
  return p.substitute(x, SorpPolynomial::zero());
}

/// Greatest solution of the single equation X = P(X):
/// P(0) + (P'(1))^inf, with P' the partial derivative with respect to X.
inline SorpPolynomial solve_one_gfp(const SorpPolynomial& p, const std::string& x) {
  const SorpPolynomial absolute = p.substitute(x, SorpPolynomial::zero());
  const SorpPolynomial slope_at_one = p.derivative(x).substitute(x, SorpPolynomial::one());
  return absolute.plus(slope_at_one.inf_power());
}

/// Solves a whole system by eliminating unknowns in their declared order:
/// each unknown is solved within its own equation (treating the remaining
/// unknowns as coefficients), the partial solution is substituted into the
/// equations that follow, and the eliminated solutions are resolved by
/// back-substitution in reverse order. The declared order is a convenience;
/// the extreme solutions are unique, so every order yields the same map.
inline std::map<std::string, SorpPolynomial> solve_system(const SymbolicSystem& system,
                                                          FixpointKind kind) {
  const std::vector<std::string>& xs = system.unknowns();
  std::map<std::string, SorpPolynomial> current;
  for (const std::string& x : xs) current.emplace(x, system.rhs(x));

  std::vector<SorpPolynomial> partial(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const SorpPolynomial& p = current.at(xs[i]);
    partial[i] = kind == FixpointKind::greatest ? solve_one_gfp(p, xs[i])
                                                : solve_one_lfp(p, xs[i]);
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      current.at(xs[j]) = current.at(xs[j]).substitute(xs[i], partial[i]);
  }

  std::map<std::string, SorpPolynomial> solution;
  for (std::size_t i = xs.size(); i-- > 0;) {
    SorpPolynomial resolved = partial[i];
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      resolved = resolved.substitute(xs[j], solution.at(xs[j]));
    solution.emplace(xs[i], std::move(resolved));
  }
  return solution;
}

/// Views a system with polynomial coefficients as a symbolic system by
/// folding each coefficient into its monomial. Coefficients must not mention
/// the solve-for indeterminates.
inline SymbolicSystem symbolic_system_from(const EquationSystem<SorpSemiring>& system) {
  std::set<std::string> unknowns(system.names().begin(), system.names().end());
  std::map<std::string, SorpPolynomial> rhs;
  for (std::size_t i = 0; i < system.size(); ++i) {
    SorpPolynomial sum = SorpPolynomial::zero();
    for (const SysTerm<SorpSemiring>& term : system.rhs(i).terms()) {
      for (const std::string& name : term.coeff.indeterminates())
        if (unknowns.count(name))
          throw ValidationError({"coefficient of equation " + system.names()[i] +
                                 " mentions the solve-for indeterminate '" + name + "'"});
      sum = sum.plus(term.coeff.times(SorpPolynomial::monomial(term.monomial.to_sorp_monomial())));
    }
    rhs.emplace(system.names()[i], std::move(sum));
  }
  return SymbolicSystem(system.names(), std::move(rhs));
}

/// Solves over any semiring by the symbolic route: abstract the coefficients
/// into fresh indeterminates, eliminate symbolically, then instantiate the
/// solution back. Agrees with the closed-form solver wherever both apply.
template <Semiring S>
Valuation<S> solve_in_semiring(const EquationSystem<S>& system, FixpointKind kind) {
  const SystemAbstraction<S> abstraction = symbolic_abstraction(system);
  const std::map<std::string, SorpPolynomial> symbolic =
      solve_system(symbolic_system_from(abstraction.system), kind);
  Valuation<S> out;
  for (const std::string& name : system.names())
    out.emplace(name, symbolic.at(name).evaluate(system.semiring(), abstraction.instantiation));
  return out;
}

}  // namespace sorpfix

#endif  // SORPFIX_SYMBOLIC_HPP
