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

#ifndef SORPFIX_TESTS_SUPPORT_LAWS_HPP
#define SORPFIX_TESTS_SUPPORT_LAWS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <sorpfix/eqsys.hpp>
#include <sorpfix/semiring.hpp>
#include <sorpfix/sorp.hpp>

#include "gen.hpp"

namespace testgen {

/// Shared property suite for every semiring instance: the semiring axioms,
/// absorption and its consequences, the natural-order laws, the two
/// infinitary-power axioms and the identities derived from them. Throws
/// std::runtime_error with a rendered counterexample on the first failure,
/// so it can run under any test harness.
template <sorpfix::Semiring S, class Sampler>
void check_semiring_laws(const S& s, Sampler&& sample, std::size_t cases, std::uint64_t seed) {
  using sorpfix::natural_leq;
  using sorpfix::pow;
  Rng rng(seed);

  const auto expect = [&](bool ok, const char* law, const auto&... values) {
    if (ok) return;
    std::string detail;
    ((detail += " " + s.to_string(values)), ...);
    throw std::runtime_error(s.name() + ": " + law + " violated for" + detail);
  };

  const auto eq = [&](const auto& x, const auto& y) { return s.equals(x, y); };

  for (std::size_t i = 0; i < cases; ++i) {
    const auto a = sample(rng);
    const auto b = sample(rng);
    const auto c = sample(rng);

    // commutative monoid of addition, with idempotence
    expect(eq(s.add(a, b), s.add(b, a)), "addition commutativity", a, b);
    expect(eq(s.add(s.add(a, b), c), s.add(a, s.add(b, c))), "addition associativity", a, b, c);
    expect(eq(s.add(a, s.zero()), a), "zero is the additive identity", a);
    expect(eq(s.add(a, a), a), "addition idempotence", a);

    // commutative monoid of multiplication
    expect(eq(s.mul(a, b), s.mul(b, a)), "multiplication commutativity", a, b);
    expect(eq(s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c))), "multiplication associativity", a, b,
           c);
    expect(eq(s.mul(a, s.one()), a), "one is the multiplicative identity", a);
    expect(eq(s.mul(a, s.zero()), s.zero()), "zero annihilates", a);

    // distributivity and absorption
    expect(eq(s.mul(a, s.add(b, c)), s.add(s.mul(a, b), s.mul(a, c))), "distributivity", a, b, c);
    expect(eq(s.add(s.one(), a), s.one()), "absorption 1 + a = 1", a);
    expect(natural_leq(s, s.mul(a, b), a), "multiplication is decreasing", a, b);

    // natural order
    expect(natural_leq(s, a, a), "natural order reflexivity", a);
    if (natural_leq(s, a, b) && natural_leq(s, b, a))
      expect(eq(a, b), "natural order antisymmetry", a, b);
    if (natural_leq(s, a, b) && natural_leq(s, b, c))
      expect(natural_leq(s, a, c), "natural order transitivity", a, b, c);
    expect(natural_leq(s, s.zero(), a), "zero is the least element", a);
    expect(natural_leq(s, a, s.one()), "one is the greatest element", a);
    expect(natural_leq(s, a, s.add(a, b)), "addition is increasing", a, b);
    if (natural_leq(s, a, c) && natural_leq(s, b, c))
      expect(natural_leq(s, s.add(a, b), c), "addition is the least upper bound", a, b, c);

    // descending power chain and its infimum
    auto current = s.one();
    const auto limit = s.inf_pow(a);
    for (int n = 0; n <= 8; ++n) {
      const auto next = s.mul(current, a);
      expect(natural_leq(s, next, current), "power chain is descending", a);
      expect(natural_leq(s, limit, current), "infinitary power bounds the chain", a);
      current = next;
    }

    // infinitary power axioms
    expect(eq(s.inf_pow(a), s.mul(a, s.inf_pow(a))), "a^inf = a * a^inf", a);
    if (natural_leq(s, b, s.add(c, s.mul(a, b))))
      expect(natural_leq(s, b, s.add(c, s.mul(s.inf_pow(a), b))),
             "b <= c + a*b implies b <= c + a^inf*b", a, b, c);

    // derived identities
    expect(eq(s.inf_pow(s.mul(a, b)), s.mul(s.inf_pow(a), s.inf_pow(b))),
           "(a*b)^inf = a^inf * b^inf", a, b);
    expect(eq(s.inf_pow(s.add(a, b)), s.add(s.inf_pow(a), s.inf_pow(b))),
           "(a+b)^inf = a^inf + b^inf", a, b);
    expect(eq(s.inf_pow(s.inf_pow(a)), s.inf_pow(a)), "(a^inf)^inf = a^inf", a);
    const std::uint64_t n = rng.range(0, 4);
    expect(eq(s.mul(pow(s, a, n), s.inf_pow(a)), s.inf_pow(a)), "a^n * a^inf = a^inf", a);
  }
}

template <sorpfix::Semiring S>
void check_semiring_laws(const S& s, std::size_t cases, std::uint64_t seed) {
  check_semiring_laws(
      s, [&s](Rng& rng) { return random_value(rng, s); }, cases, seed);
}

/// Calculus of absorptive polynomials: chain rule, Taylor expansion and the
/// monotone-product implication for the partial derivative, plus the finite
/// distributivity of products and infinitary powers over polynomial sums.
inline void check_polynomial_calculus_laws(std::size_t cases, std::uint64_t seed) {
  using sorpfix::SorpPolynomial;
  Rng rng(seed);
  const std::vector<std::string> names{"x", "y", "z"};
  const std::string x = "x";
  const sorpfix::SorpSemiring s;

  const auto expect = [&](bool ok, const char* law, const SorpPolynomial& p,
                          const SorpPolynomial& q) {
    if (!ok)
      throw std::runtime_error(std::string(law) + " violated for P = " + p.to_string() +
                               ", Q = " + q.to_string());
  };

  for (std::size_t i = 0; i < cases; ++i) {
    const SorpPolynomial p = random_sorp(rng, names);
    const SorpPolynomial q = random_sorp(rng, names);
    const SorpPolynomial a = random_sorp(rng, names);
    const SorpPolynomial b = random_sorp(rng, names);
    const SorpPolynomial c = random_sorp(rng, names);

    // chain rule: P(Q)' = P'(Q) * Q'
    expect(p.substitute(x, q).derivative(x) ==
               p.derivative(x).substitute(x, q).times(q.derivative(x)),
           "chain rule", p, q);

    // Taylor: P(a+b) = P(a) + P'(a+b) * b
    const SorpPolynomial a_plus_b = a.plus(b);
    expect(p.substitute(x, a_plus_b) ==
               p.substitute(x, a).plus(p.derivative(x).substitute(x, a_plus_b).times(b)),
           "Taylor expansion", p, a_plus_b);

    // monotone product: a*c <= b*c implies P(a)*c <= P(b)*c
    {
      const SorpPolynomial low = a.times(b);  // low <= a by absorption
      if (natural_leq(s, low.times(c), a.times(c)))
        expect(natural_leq(s, p.substitute(x, low).times(c), p.substitute(x, a).times(c)),
               "monotone product", p, c);
    }

    // finite distributivity over polynomial sums
    {
      SorpPolynomial sum = SorpPolynomial::zero();
      SorpPolynomial distributed = SorpPolynomial::zero();
      SorpPolynomial infs = SorpPolynomial::zero();
      for (int k = 0, count = static_cast<int>(rng.range(0, 3)); k < count; ++k) {
        const SorpPolynomial member = random_sorp(rng, names);
        sum = sum.plus(member);
        distributed = distributed.plus(p.times(member));
        infs = infs.plus(member.inf_power());
      }
      expect(p.times(sum) == distributed, "product distributes over sums", p, sum);
      expect(sum.inf_power() == infs, "infinitary power distributes over sums", p, sum);
    }
  }
}

/// Instantiating coefficients commutes with solving: for random systems over
/// absorptive polynomials and random assignments into the target semiring,
/// solving then mapping equals mapping then solving, for both extremes.
template <sorpfix::Semiring S>
void check_homomorphism_preservation(const S& target, std::size_t cases, std::uint64_t seed) {
  using namespace sorpfix;
  Rng rng(seed);
  const std::vector<std::string> coeff_names{"a", "b", "c"};

  for (std::size_t i = 0; i < cases; ++i) {
    const EquationSystem<SorpSemiring> system = random_system(
        rng, SorpSemiring{},
        [&](Rng& r) { return random_monomial_coeff(r, coeff_names); }, 2, 2, 2);
    std::map<std::string, value_t<S>> assignment;
    for (const std::string& name : coeff_names)
      assignment.emplace(name, random_value(rng, target));

    const EquationSystem<S> mapped = map_system(system, target, assignment);
    for (const FixpointKind kind : {FixpointKind::least, FixpointKind::greatest}) {
      const Valuation<SorpSemiring> symbolic = kind == FixpointKind::least
                                                   ? solve_lfp_closed(system)
                                                   : solve_gfp_closed(system);
      Valuation<S> mapped_solution;
      for (const auto& [name, poly] : symbolic)
        mapped_solution.emplace(name, poly.evaluate(target, assignment));
      const Valuation<S> solved_after_mapping =
          kind == FixpointKind::least ? solve_lfp_closed(mapped) : solve_gfp_closed(mapped);
      if (!valuation_equal(target, mapped_solution, solved_after_mapping))
        throw std::runtime_error(target.name() +
                                 ": instantiation does not commute with the " +
                                 std::string(kind == FixpointKind::least ? "least" : "greatest") +
                                 " solution");
    }
  }
}

}  // namespace testgen

#endif  // SORPFIX_TESTS_SUPPORT_LAWS_HPP
