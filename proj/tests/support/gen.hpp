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

#ifndef SORPFIX_TESTS_SUPPORT_GEN_HPP
#define SORPFIX_TESTS_SUPPORT_GEN_HPP

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <sorpfix/boolean.hpp>
#include <sorpfix/eqsys.hpp>
#include <sorpfix/lukasiewicz.hpp>
#include <sorpfix/minmax.hpp>
#include <sorpfix/rational.hpp>
#include <sorpfix/sorp.hpp>
#include <sorpfix/symbolic.hpp>
#include <sorpfix/tropical.hpp>
#include <sorpfix/viterbi.hpp>

namespace testgen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound).
  std::size_t index(std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(engine_);
  }

  /// Uniform in [lo, hi].
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
  }

  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return range(1, den) <= num; }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[index(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

// --- value generators, one overload per semiring ---------------------------

inline sorpfix::TropicalValue random_value(Rng& rng, const sorpfix::Tropical&) {
  if (rng.chance(1, 6)) return sorpfix::TropicalValue::infinity();
  return sorpfix::TropicalValue::finite(
      sorpfix::Rational(rng.range(0, 9), rng.range(1, 4)));
}

inline sorpfix::ViterbiValue random_value(Rng& rng, const sorpfix::Viterbi&) {
  const std::uint64_t den = rng.range(1, 5);
  return sorpfix::ViterbiValue(sorpfix::Rational(rng.range(0, den), den));
}

inline sorpfix::LukasiewiczValue random_value(Rng& rng, const sorpfix::Lukasiewicz&) {
  const std::uint64_t den = rng.range(1, 5);
  return sorpfix::LukasiewiczValue(sorpfix::Rational(rng.range(0, den), den));
}

inline bool random_value(Rng& rng, const sorpfix::Boolean&) { return rng.chance(1, 2); }

inline sorpfix::MinMaxValue random_value(Rng& rng, const sorpfix::MinMax& s) {
  return rng.pick(s.carrier());
}

inline sorpfix::Exponent random_exponent(Rng& rng, std::uint64_t max_finite, bool allow_infinite) {
  if (allow_infinite && rng.chance(1, 5)) return sorpfix::Exponent::infinity();
  return sorpfix::Exponent(rng.range(0, max_finite));
}

inline sorpfix::Monomial random_monomial(Rng& rng, const std::vector<std::string>& names,
                                         std::uint64_t max_exp, bool allow_infinite) {
  std::map<std::string, sorpfix::Exponent> factors;
  for (const std::string& name : names)
    if (rng.chance(1, 2)) factors.emplace(name, random_exponent(rng, max_exp, allow_infinite));
  return sorpfix::Monomial(std::move(factors));
}

inline sorpfix::SorpPolynomial random_sorp(Rng& rng, const std::vector<std::string>& names,
                                           std::size_t max_monomials = 3,
                                           std::uint64_t max_exp = 2, bool allow_infinite = true) {
  std::vector<sorpfix::Monomial> monomials;
  const std::size_t count = rng.index(max_monomials + 1);
  for (std::size_t i = 0; i < count; ++i)
    monomials.push_back(random_monomial(rng, names, max_exp, allow_infinite));
  return sorpfix::SorpPolynomial::maximals(std::move(monomials));
}

inline sorpfix::SorpPolynomial random_value(Rng& rng, const sorpfix::SorpSemiring&) {
  return random_sorp(rng, {"x", "y", "z"});
}

// --- nonzero coefficient generators -----------------------------------------

template <sorpfix::Semiring S>
sorpfix::value_t<S> random_nonzero(Rng& rng, const S& s) {
  for (;;) {
    sorpfix::value_t<S> v = random_value(rng, s);
    if (!s.equals(v, s.zero())) return v;
  }
}

/// Coefficient for systems over absorptive polynomials: one random monomial
/// over the given coefficient names (always nonzero as a polynomial).
inline sorpfix::SorpPolynomial random_monomial_coeff(Rng& rng,
                                                     const std::vector<std::string>& names,
                                                     bool allow_infinite = true) {
  return sorpfix::SorpPolynomial::monomial(random_monomial(rng, names, 2, allow_infinite));
}

// --- random systems ----------------------------------------------------------

inline std::vector<std::string> unknown_names(std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= count; ++i) names.push_back("X" + std::to_string(i));
  return names;
}

/// Random equation system: up to `max_unknowns` indeterminates, up to
/// `max_terms` coefficient-monomial pairs per equation (possibly none),
/// exponents in [1, max_exp], distinct monomials, nonzero coefficients.
template <sorpfix::Semiring S, class CoeffGen>
sorpfix::EquationSystem<S> random_system(Rng& rng, const S& s, CoeffGen&& coeff,
                                         std::size_t max_unknowns = 3, std::size_t max_terms = 3,
                                         std::uint64_t max_exp = 2,
                                         std::uint64_t max_monomial_degree = 4) {
  const std::size_t count = 1 + rng.index(max_unknowns);
  const std::vector<std::string> names = unknown_names(count);
  std::vector<sorpfix::SysPolynomial<S>> rhs;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<sorpfix::SysTerm<S>> terms;
    std::set<sorpfix::SysMonomial> seen;
    const std::size_t term_count = rng.index(max_terms + 1);
    for (std::size_t t = 0; t < term_count; ++t) {
      std::map<std::string, std::uint64_t> exponents;
      std::uint64_t degree = 0;
      for (const std::string& name : names) {
        if (degree >= max_monomial_degree) break;
        if (!rng.chance(1, 2)) continue;
        const std::uint64_t e =
            std::min<std::uint64_t>(rng.range(1, max_exp), max_monomial_degree - degree);
        exponents.emplace(name, e);
        degree += e;
      }
      sorpfix::SysMonomial monomial{std::move(exponents)};
      if (!seen.insert(monomial).second) continue;
      terms.push_back({coeff(rng), std::move(monomial)});
    }
    rhs.emplace_back(std::move(terms));
  }
  return sorpfix::EquationSystem<S>(s, names, std::move(rhs));
}

// --- fixtures shared across suites -------------------------------------------

/// The cost system of the three-node graph example:
/// Xa = 1 + Xa, Xb = min(1 + Xa, 20 + Xc), Xc = 0 + Xc over the tropical
/// semiring (coefficients 1, 1, 20, 0).
inline sorpfix::EquationSystem<sorpfix::Tropical> make_intro_tropical() {
  using namespace sorpfix;
  const Tropical s;
  const auto c = [](long v) { return TropicalValue::finite(Rational(v)); };
  std::vector<SysPolynomial<Tropical>> rhs;
  rhs.emplace_back(std::vector<SysTerm<Tropical>>{
      {c(1), SysMonomial({{"Xa", 1}})}});
  rhs.emplace_back(std::vector<SysTerm<Tropical>>{
      {c(1), SysMonomial({{"Xa", 1}})}, {c(20), SysMonomial({{"Xc", 1}})}});
  rhs.emplace_back(std::vector<SysTerm<Tropical>>{
      {c(0), SysMonomial({{"Xc", 1}})}});
  return {s, {"Xa", "Xb", "Xc"}, std::move(rhs)};
}

/// X1 = b*X2, X2 = (b+c)*X2*X3, X3 = a*X1 over absorptive polynomials in
/// a, b, c.
inline sorpfix::EquationSystem<sorpfix::SorpSemiring> make_example_provenance() {
  using namespace sorpfix;
  const SorpSemiring s;
  const auto var = [](const char* n) { return SorpPolynomial::indeterminate(n); };
  std::vector<SysPolynomial<SorpSemiring>> rhs;
  rhs.emplace_back(std::vector<SysTerm<SorpSemiring>>{
      {var("b"), SysMonomial({{"X2", 1}})}});
  rhs.emplace_back(std::vector<SysTerm<SorpSemiring>>{
      {var("b").plus(var("c")), SysMonomial({{"X2", 1}, {"X3", 1}})}});
  rhs.emplace_back(std::vector<SysTerm<SorpSemiring>>{
      {var("a"), SysMonomial({{"X1", 1}})}});
  return {s, {"X1", "X2", "X3"}, std::move(rhs)};
}

/// X1 = a*X1 + b*X2*X3, X2 = c*X1^2, X3 = d over absorptive polynomials.
inline sorpfix::EquationSystem<sorpfix::SorpSemiring> make_branching_sample() {
  using namespace sorpfix;
  const SorpSemiring s;
  const auto var = [](const char* n) { return SorpPolynomial::indeterminate(n); };
  std::vector<SysPolynomial<SorpSemiring>> rhs;
  rhs.emplace_back(std::vector<SysTerm<SorpSemiring>>{
      {var("a"), SysMonomial({{"X1", 1}})},
      {var("b"), SysMonomial({{"X2", 1}, {"X3", 1}})}});
  rhs.emplace_back(std::vector<SysTerm<SorpSemiring>>{
      {var("c"), SysMonomial({{"X1", 2}})}});
  rhs.emplace_back(std::vector<SysTerm<SorpSemiring>>{{var("d"), SysMonomial()}});
  return {s, {"X1", "X2", "X3"}, std::move(rhs)};
}

/// The symbolic form of the intro system with the coefficient names reused
/// the way the worked example writes them: Xa = a*Xa, Xb = a*Xa + b*Xc,
/// Xc = c*Xc.
inline sorpfix::SymbolicSystem make_intro_symbolic() {
  using namespace sorpfix;
  const auto var = [](const char* n) { return SorpPolynomial::indeterminate(n); };
  std::map<std::string, SorpPolynomial> rhs;
  rhs.emplace("Xa", var("a").times(var("Xa")));
  rhs.emplace("Xb", var("a").times(var("Xa")).plus(var("b").times(var("Xc"))));
  rhs.emplace("Xc", var("c").times(var("Xc")));
  return SymbolicSystem({"Xa", "Xb", "Xc"}, std::move(rhs));
}

}  // namespace testgen

#endif  // SORPFIX_TESTS_SUPPORT_GEN_HPP
