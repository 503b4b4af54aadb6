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

#ifndef SORPFIX_TESTS_SUPPORT_DERIVATIVE_ORACLE_HPP
#define SORPFIX_TESTS_SUPPORT_DERIVATIVE_ORACLE_HPP

#include <string>
#include <vector>

#include <sorpfix/sorp.hpp>

namespace testgen {

/// Independent derivative, by literal expansion of the inductive rules
///   X' = 1,  Y' = 0 (Y != X),  (PQ)' = P'Q + PQ',  (P+Q)' = P' + Q',
///   (P^inf)' = P^inf * P'.
/// Every monomial is unfolded into a list of atomic factors (a variable
/// repeated once per finite exponent, an infinitary power kept whole) and
/// the product rule is applied across the list. Stays independent of the
/// monomial-wise shortcut used by SorpPolynomial::derivative.
inline sorpfix::SorpPolynomial derivative_by_expansion(const sorpfix::SorpPolynomial& p,
                                                       const std::string& x) {
  using sorpfix::Monomial;
  using sorpfix::SorpPolynomial;

  struct Atom {
    std::string name;
    bool infinite;
  };

  SorpPolynomial total = SorpPolynomial::zero();
  for (const Monomial& m : p.monomials()) {
    std::vector<Atom> atoms;
    for (const auto& [name, exponent] : m.factors()) {
      if (exponent.is_infinite()) {
        atoms.push_back({name, true});
      } else {
        for (std::uint64_t i = 0; i < exponent.finite_value(); ++i)
          atoms.push_back({name, false});
      }
    }
    const auto atom_poly = [](const Atom& a) {
      return a.infinite
                 ? SorpPolynomial::monomial(Monomial{{a.name, sorpfix::Exponent::infinity()}})
                 : SorpPolynomial::indeterminate(a.name);
    };
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (atoms[i].name != x) continue;  // this factor differentiates to 0
      SorpPolynomial term = SorpPolynomial::one();
      for (std::size_t j = 0; j < atoms.size(); ++j) {
        if (j == i && !atoms[j].infinite) continue;  // X' = 1
        // (X^inf)' = X^inf * X' keeps the infinitary factor in place.
        term = term.times(atom_poly(atoms[j]));
      }
      total = total.plus(term);
    }
  }
  return total;
}

}  // namespace testgen

#endif  // SORPFIX_TESTS_SUPPORT_DERIVATIVE_ORACLE_HPP
