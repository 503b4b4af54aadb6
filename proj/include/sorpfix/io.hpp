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

#ifndef SORPFIX_IO_HPP
#define SORPFIX_IO_HPP

#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "boolean.hpp"
#include "derivation.hpp"
#include "eqsys.hpp"
#include "lukasiewicz.hpp"
#include "minmax.hpp"
#include "semiring.hpp"
#include "sorp.hpp"
#include "symbolic.hpp"
#include "tropical.hpp"
#include "viterbi.hpp"

namespace sorpfix {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SolveMethod { closed, symbolic, kleene };
enum class OutputFormat { json, text };

inline std::string to_string(FixpointKind kind) {
  return kind == FixpointKind::least ? "least" : "greatest";
}

inline std::string to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::closed: return "closed";
    case SolveMethod::symbolic: return "symbolic";
    case SolveMethod::kleene: return "kleene";
  }
  return "?";
}

/// Equation system as parsed from a document: exponents may still be
/// infinite here. The closed-form and Kleene paths require finite exponents
/// (to_equation_system), the symbolic path accepts everything.
template <Semiring S>
struct RawTerm {
  value_t<S> coeff;
  std::map<std::string, Exponent> monomial;
};

template <Semiring S>
struct RawSystem {
  S semiring;
  std::vector<std::string> names;
  std::vector<std::vector<RawTerm<S>>> equations;  // aligned with names
  std::vector<std::string> sorp_names;             // declared coefficient names (sorp only)

  bool has_infinite_exponent() const {
    for (const auto& terms : equations)
      for (const auto& term : terms)
        for (const auto& [name, exponent] : term.monomial)
          if (exponent.is_infinite()) return true;
    return false;
  }

  EquationSystem<S> to_equation_system() const {
    std::vector<SysPolynomial<S>> rhs;
    for (const auto& terms : equations) {
      std::vector<SysTerm<S>> out;
      for (const auto& term : terms) {
        std::map<std::string, std::uint64_t> exponents;
        for (const auto& [name, exponent] : term.monomial) {
          if (exponent.is_infinite())
            throw ValidationError({"infinite exponents require the symbolic method"});
          exponents.emplace(name, exponent.finite_value());
        }
        out.push_back({term.coeff, SysMonomial(std::move(exponents))});
      }
      rhs.emplace_back(std::move(out));
    }
    return EquationSystem<S>(semiring, names, std::move(rhs));
  }
};

using ParsedSystem = std::variant<RawSystem<Tropical>, RawSystem<Viterbi>, RawSystem<Lukasiewicz>,
                                  RawSystem<Boolean>, RawSystem<MinMax>, RawSystem<SorpSemiring>>;

namespace detail {

inline void expect_keys(const Json& doc, const std::set<std::string>& allowed,
                        std::vector<std::string>& issues) {
  for (const auto& [key, value] : doc.items())
    if (!allowed.count(key)) issues.push_back("unknown field '" + key + "'");
}

inline std::vector<std::string> parse_name_list(const Json& doc, const std::string& field,
                                                std::vector<std::string>& issues) {
  std::vector<std::string> names;
  if (!doc.contains(field)) {
    issues.push_back("missing field '" + field + "'");
    return names;
  }
  const Json& list = doc.at(field);
  if (!list.is_array()) {
    issues.push_back("'" + field + "' must be an array of names");
    return names;
  }
  for (const Json& entry : list) {
    if (!entry.is_string() || !is_identifier(entry.get<std::string>())) {
      issues.push_back("'" + field + "' entries must be identifiers, got " + entry.dump());
      continue;
    }
    names.push_back(entry.get<std::string>());
  }
  return names;
}

inline std::optional<Exponent> exponent_from_json(const Json& value, bool allow_infinite,
                                                  const std::string& where,
                                                  std::vector<std::string>& issues) {
  if (value.is_string() && value.get<std::string>() == "inf") {
    if (!allow_infinite) {
      issues.push_back(where + ": exponent \"inf\" is only accepted with the symbolic method");
      return std::nullopt;
    }
    return Exponent::infinity();
  }
  if (value.is_number_unsigned() && value.get<std::uint64_t>() > 0)
    return Exponent(value.get<std::uint64_t>());
  issues.push_back(where + ": exponents must be positive integers or \"inf\", got " +
                   value.dump());
  return std::nullopt;
}

// Per-semiring value codecs. Parsers push a diagnostic and return nothing on
// malformed input; rendering is canonical (parse of a rendered value gives
// the value back).

inline std::optional<TropicalValue> value_from_json(const Tropical& s, const Json& value,
                                                    const std::string& where,
                                                    std::vector<std::string>& issues) {
  try {
    if (value.is_string()) return s.parse(value.get<std::string>());
    if (value.is_number_unsigned())
      return TropicalValue::finite(Rational(value.get<std::uint64_t>()));
  } catch (const std::invalid_argument& e) {
    issues.push_back(where + ": " + e.what());
    return std::nullopt;
  }
  issues.push_back(where + ": tropical values are \"inf\" or nonnegative rational strings, got " +
                   value.dump());
  return std::nullopt;
}

inline Json value_to_json(const Tropical& s, const TropicalValue& v) { return s.to_string(v); }

inline std::optional<ViterbiValue> value_from_json(const Viterbi& s, const Json& value,
                                                   const std::string& where,
                                                   std::vector<std::string>& issues) {
  try {
    if (value.is_string()) return s.parse(value.get<std::string>());
    if (value.is_number_unsigned()) return ViterbiValue(Rational(value.get<std::uint64_t>()));
  } catch (const std::invalid_argument& e) {
    issues.push_back(where + ": " + e.what());
    return std::nullopt;
  }
  issues.push_back(where + ": Viterbi values are rational strings in [0,1], got " + value.dump());
  return std::nullopt;
}

inline Json value_to_json(const Viterbi& s, const ViterbiValue& v) { return s.to_string(v); }

inline std::optional<LukasiewiczValue> value_from_json(const Lukasiewicz& s, const Json& value,
                                                       const std::string& where,
                                                       std::vector<std::string>& issues) {
  try {
    if (value.is_string()) return s.parse(value.get<std::string>());
    if (value.is_number_unsigned()) return LukasiewiczValue(Rational(value.get<std::uint64_t>()));
  } catch (const std::invalid_argument& e) {
    issues.push_back(where + ": " + e.what());
    return std::nullopt;
  }
  issues.push_back(where + ": Lukasiewicz values are rational strings in [0,1], got " +
                   value.dump());
  return std::nullopt;
}

inline Json value_to_json(const Lukasiewicz& s, const LukasiewiczValue& v) {
  return s.to_string(v);
}

inline std::optional<bool> value_from_json(const Boolean&, const Json& value,
                                           const std::string& where,
                                           std::vector<std::string>& issues) {
  if (value.is_boolean()) return value.get<bool>();
  issues.push_back(where + ": Boolean values are true or false, got " + value.dump());
  return std::nullopt;
}

inline Json value_to_json(const Boolean&, bool v) { return v; }

inline std::optional<MinMaxValue> value_from_json(const MinMax& s, const Json& value,
                                                  const std::string& where,
                                                  std::vector<std::string>& issues) {
  if (value.is_string()) {
    try {
      return s.from_label(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      issues.push_back(where + ": " + e.what());
      return std::nullopt;
    }
  }
  issues.push_back(where + ": min-max values are chain labels, got " + value.dump());
  return std::nullopt;
}

inline Json value_to_json(const MinMax& s, const MinMaxValue& v) { return s.to_string(v); }

inline std::optional<SorpPolynomial> value_from_json(const SorpSemiring&, const Json& value,
                                                     const std::string& where,
                                                     std::vector<std::string>& issues) {
  if (!value.is_array()) {
    issues.push_back(where + ": polynomial values are arrays of monomial objects, got " +
                     value.dump());
    return std::nullopt;
  }
  std::vector<Monomial> monomials;
  for (const Json& entry : value) {
    if (!entry.is_object()) {
      issues.push_back(where + ": monomials are objects mapping names to exponents, got " +
                       entry.dump());
      return std::nullopt;
    }
    std::map<std::string, Exponent> factors;
    for (const auto& [name, exponent] : entry.items()) {
      const auto parsed = exponent_from_json(exponent, true, where, issues);
      if (!parsed) return std::nullopt;
      factors.emplace(name, *parsed);
    }
    monomials.push_back(Monomial(std::move(factors)));
  }
  return SorpPolynomial::maximals(std::move(monomials));
}

inline Json value_to_json(const SorpSemiring&, const SorpPolynomial& v) {
  Json out = Json::array();
  for (const Monomial& m : v.monomials()) {
    Json entry = Json::object();
    for (const auto& [name, exponent] : m.factors()) {
      if (exponent.is_infinite())
        entry[name] = "inf";
      else
        entry[name] = exponent.finite_value();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

template <Semiring S>
RawSystem<S> parse_equations(S semiring, const Json& doc, std::vector<std::string> names,
                             std::vector<std::string> sorp_names, bool allow_infinite_exponents,
                             std::vector<std::string>& issues) {
  RawSystem<S> raw{std::move(semiring), std::move(names), {}, std::move(sorp_names)};
  if (!doc.contains("equations") || !doc.at("equations").is_object()) {
    issues.push_back("missing or malformed 'equations' object");
    return raw;
  }
  const Json& equations = doc.at("equations");
  const std::set<std::string> declared(raw.names.begin(), raw.names.end());
  const std::set<std::string> sorp_declared(raw.sorp_names.begin(), raw.sorp_names.end());
  for (const auto& [key, value] : equations.items())
    if (!declared.count(key)) issues.push_back("equation for undeclared indeterminate '" + key + "'");

  for (const std::string& name : raw.names) {
    std::vector<RawTerm<S>> terms;
    if (!equations.contains(name)) {
      issues.push_back("missing equation for indeterminate '" + name + "'");
      raw.equations.push_back(std::move(terms));
      continue;
    }
    const Json& list = equations.at(name);
    if (!list.is_array()) {
      issues.push_back("equation " + name + ": expected an array of terms");
      raw.equations.push_back(std::move(terms));
      continue;
    }
    std::set<std::map<std::string, Exponent>> seen;
    for (std::size_t t = 0; t < list.size(); ++t) {
      const std::string where = "equations." + name + "[" + std::to_string(t) + "]";
      const Json& entry = list[t];
      if (!entry.is_object() || !entry.contains("coeff") || !entry.contains("monomial")) {
        issues.push_back(where + ": terms are objects with 'coeff' and 'monomial'");
        continue;
      }
      expect_keys(entry, {"coeff", "monomial"}, issues);
      const auto coeff =
          value_from_json(raw.semiring, entry.at("coeff"), where + ".coeff", issues);
      if (coeff && raw.semiring.equals(*coeff, raw.semiring.zero()))
        issues.push_back(where + ".coeff: coefficients must be nonzero");
      if constexpr (std::is_same_v<S, SorpSemiring>) {
        if (coeff)
          for (const std::string& used : coeff->indeterminates())
            if (!sorp_declared.count(used))
              issues.push_back(where + ".coeff: undeclared sorp indeterminate '" + used + "'");
      }
      const Json& monomial = entry.at("monomial");
      if (!monomial.is_object()) {
        issues.push_back(where + ".monomial: expected an object mapping names to exponents");
        continue;
      }
      std::map<std::string, Exponent> exponents;
      bool monomial_ok = true;
      for (const auto& [factor, exponent] : monomial.items()) {
        if (!declared.count(factor)) {
          issues.push_back(where + ".monomial: undeclared indeterminate '" + factor + "'");
          monomial_ok = false;
        }
        const auto parsed =
            exponent_from_json(exponent, allow_infinite_exponents, where + ".monomial", issues);
        if (!parsed) {
          monomial_ok = false;
          continue;
        }
        exponents.emplace(factor, *parsed);
      }
      if (!seen.insert(exponents).second)
        issues.push_back(where + ": duplicate monomial within the equation");
      if (coeff && monomial_ok) terms.push_back({*coeff, std::move(exponents)});
    }
    raw.equations.push_back(std::move(terms));
  }
  return raw;
}

}  // namespace detail

/// Parses and validates an equation-system document. Collects every
/// violation before failing: syntactically broken JSON raises ParseError,
/// everything else raises ValidationError listing all problems.
inline ParsedSystem parse_system(const Json& doc, bool allow_infinite_exponents) {
  std::vector<std::string> issues;
  if (!doc.is_object()) throw ValidationError({"document root must be an object"});
  detail::expect_keys(
      doc, {"semiring", "minmax_chain", "sorp_indeterminates", "indeterminates", "equations"},
      issues);

  std::string kind;
  if (doc.contains("semiring") && doc.at("semiring").is_string())
    kind = doc.at("semiring").get<std::string>();
  else
    issues.push_back("missing or malformed 'semiring' field");

  std::vector<std::string> names = detail::parse_name_list(doc, "indeterminates", issues);
  {
    std::set<std::string> unique(names.begin(), names.end());
    if (unique.size() != names.size()) issues.push_back("duplicate indeterminate names");
  }

  if (doc.contains("minmax_chain") && kind != "minmax")
    issues.push_back("'minmax_chain' is only valid for the minmax semiring");
  if (doc.contains("sorp_indeterminates") && kind != "sorp")
    issues.push_back("'sorp_indeterminates' is only valid for the sorp semiring");

  const auto finish = [&](auto raw) -> ParsedSystem {
    if (!issues.empty()) throw ValidationError(std::move(issues));
    return raw;
  };

  if (kind == "tropical") {
    return finish(detail::parse_equations(Tropical{}, doc, std::move(names), {},
                                          allow_infinite_exponents, issues));
  }
  if (kind == "viterbi") {
    return finish(detail::parse_equations(Viterbi{}, doc, std::move(names), {},
                                          allow_infinite_exponents, issues));
  }
  if (kind == "lukasiewicz") {
    return finish(detail::parse_equations(Lukasiewicz{}, doc, std::move(names), {},
                                          allow_infinite_exponents, issues));
  }
  if (kind == "boolean") {
    return finish(detail::parse_equations(Boolean{}, doc, std::move(names), {},
                                          allow_infinite_exponents, issues));
  }
  if (kind == "minmax") {
    std::vector<std::string> labels;
    if (!doc.contains("minmax_chain") || !doc.at("minmax_chain").is_array()) {
      issues.push_back("minmax systems need a 'minmax_chain' array, least label first");
    } else {
      for (const Json& label : doc.at("minmax_chain")) {
        if (label.is_string())
          labels.push_back(label.get<std::string>());
        else
          issues.push_back("'minmax_chain' entries must be strings, got " + label.dump());
      }
    }
    std::optional<MinMax> semiring;
    try {
      semiring.emplace(labels);
    } catch (const std::invalid_argument& e) {
      issues.push_back(std::string("'minmax_chain': ") + e.what());
    }
    if (!semiring) throw ValidationError(std::move(issues));
    return finish(detail::parse_equations(*semiring, doc, std::move(names), {},
                                          allow_infinite_exponents, issues));
  }
  if (kind == "sorp") {
    std::vector<std::string> sorp_names =
        detail::parse_name_list(doc, "sorp_indeterminates", issues);
    {
      const std::set<std::string> unknowns(names.begin(), names.end());
      std::set<std::string> unique;
      for (const std::string& name : sorp_names) {
        if (unknowns.count(name))
          issues.push_back("sorp indeterminate '" + name + "' collides with an indeterminate");
        if (!unique.insert(name).second)
          issues.push_back("duplicate sorp indeterminate '" + name + "'");
      }
    }
    return finish(detail::parse_equations(SorpSemiring{}, doc, std::move(names),
                                          std::move(sorp_names), allow_infinite_exponents,
                                          issues));
  }
  issues.push_back("unknown semiring '" + kind + "'");
  throw ValidationError(std::move(issues));
}

/// Canonical document for a parsed system; parse(render(x)) == x and
/// render(parse(d)) == d whenever d is already canonical.
inline Json render_system(const ParsedSystem& parsed) {
  return std::visit(
      [](const auto& raw) {
        using S = std::decay_t<decltype(raw.semiring)>;
        Json doc = Json::object();
        doc["semiring"] = raw.semiring.name();
        if constexpr (std::is_same_v<S, MinMax>) doc["minmax_chain"] = raw.semiring.chain().labels();
        if constexpr (std::is_same_v<S, SorpSemiring>) doc["sorp_indeterminates"] = raw.sorp_names;
        doc["indeterminates"] = raw.names;
        Json equations = Json::object();
        for (std::size_t i = 0; i < raw.names.size(); ++i) {
          Json terms = Json::array();
          for (const auto& term : raw.equations[i]) {
            Json entry = Json::object();
            entry["coeff"] = detail::value_to_json(raw.semiring, term.coeff);
            Json monomial = Json::object();
            for (const auto& [name, exponent] : term.monomial) {
              if (exponent.is_infinite())
                monomial[name] = "inf";
              else
                monomial[name] = exponent.finite_value();
            }
            entry["monomial"] = std::move(monomial);
            terms.push_back(std::move(entry));
          }
          equations[raw.names[i]] = std::move(terms);
        }
        doc["equations"] = std::move(equations);
        return doc;
      },
      parsed);
}

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNoConvergence = 3;
inline constexpr int kExitVerificationFailed = 4;

struct JobSpec {
  std::string input_path;
  FixpointKind fixpoint = FixpointKind::greatest;
  SolveMethod method = SolveMethod::closed;
  std::optional<std::size_t> max_steps;  // required for the kleene method
  OutputFormat output = OutputFormat::json;
  bool verify = false;
};

struct JobResult {
  int exit_code = kExitOk;
  Json document;
  std::string output;  // rendered document, either JSON or text
  std::string error;   // diagnostics for stderr
};

namespace detail {

/// Builds a symbolic system straight from a raw system: coefficients become
/// fresh indeterminates (sorp coefficients are kept as they are), so inputs
/// with infinite exponents stay solvable.
template <Semiring S>
struct RawSymbolic {
  SymbolicSystem system;
  std::map<std::string, value_t<S>> instantiation;
};

template <Semiring S>
RawSymbolic<S> symbolic_from_raw(const RawSystem<S>& raw) {
  std::set<std::string> taken(raw.names.begin(), raw.names.end());
  std::size_t counter = 0;
  std::map<std::string, value_t<S>> instantiation;
  std::map<std::string, SorpPolynomial> rhs;
  for (std::size_t i = 0; i < raw.names.size(); ++i) {
    SorpPolynomial sum = SorpPolynomial::zero();
    for (const RawTerm<S>& term : raw.equations[i]) {
      const SorpPolynomial monomial = SorpPolynomial::monomial(Monomial(term.monomial));
      if constexpr (std::is_same_v<S, SorpSemiring>) {
        sum = sum.plus(term.coeff.times(monomial));
      } else {
        const std::string fresh = next_fresh_name(taken, counter);
        instantiation.emplace(fresh, term.coeff);
        sum = sum.plus(SorpPolynomial::indeterminate(fresh).times(monomial));
      }
    }
    rhs.emplace(raw.names[i], std::move(sum));
  }
  return {SymbolicSystem(raw.names, std::move(rhs)), std::move(instantiation)};
}

template <Semiring S>
Valuation<S> solve_symbolic_raw(const RawSystem<S>& raw, FixpointKind kind) {
  const RawSymbolic<S> sym = symbolic_from_raw(raw);
  const std::map<std::string, SorpPolynomial> solution = solve_system(sym.system, kind);
  Valuation<S> out;
  for (const std::string& name : raw.names) {
    if constexpr (std::is_same_v<S, SorpSemiring>)
      out.emplace(name, solution.at(name));
    else
      out.emplace(name, solution.at(name).evaluate(raw.semiring, sym.instantiation));
  }
  return out;
}

/// Direct evaluation of a raw right-hand side, infinite exponents included.
template <Semiring S>
value_t<S> evaluate_raw_terms(const S& s, const std::vector<RawTerm<S>>& terms,
                              const Valuation<S>& v) {
  value_t<S> sum = s.zero();
  for (const RawTerm<S>& term : terms) {
    value_t<S> product = term.coeff;
    for (const auto& [name, exponent] : term.monomial) {
      const value_t<S>& value = v.at(name);
      product = s.mul(product, exponent.is_infinite() ? s.inf_pow(value)
                                                      : pow(s, value, exponent.finite_value()));
    }
    sum = s.add(sum, product);
  }
  return sum;
}

/// Verification oracle: the solution must be an exact fixed point; when both
/// solver routes apply they must agree; and over finite carriers within
/// budget the brute-force extremes must match.
template <Semiring S>
bool verify_solution(const RawSystem<S>& raw, const Valuation<S>& solution, FixpointKind kind,
                     SolveMethod method, std::string& detail_out) {
  const S& s = raw.semiring;
  for (std::size_t i = 0; i < raw.names.size(); ++i) {
    if (!s.equals(evaluate_raw_terms(s, raw.equations[i], solution),
                  solution.at(raw.names[i]))) {
      detail_out = "solution is not a fixed point at " + raw.names[i];
      return false;
    }
  }
  if (!raw.has_infinite_exponent()) {
    const EquationSystem<S> system = raw.to_equation_system();
    const Valuation<S> other =
        method == SolveMethod::closed
            ? solve_in_semiring(system, kind)
            : (kind == FixpointKind::least ? solve_lfp_closed(system) : solve_gfp_closed(system));
    if (!valuation_equal(s, solution, other)) {
      detail_out = "closed-form and symbolic solutions disagree";
      return false;
    }
    if constexpr (FiniteSemiring<S>) {
      try {
        const ExtremeFixedPoints<S> extreme = brute_force_extreme_fixed_points(system);
        const Valuation<S>& expected =
            kind == FixpointKind::least ? extreme.least : extreme.greatest;
        if (!valuation_equal(s, solution, expected)) {
          detail_out = "brute-force extreme fixed point disagrees";
          return false;
        }
      } catch (const EnumerationBudgetError&) {
        // carrier too large to enumerate; the remaining checks stand
      }
    }
  }
  return true;
}

template <Semiring S>
JobResult run_typed(const RawSystem<S>& raw, const JobSpec& spec) {
  JobResult result;
  Valuation<S> solution;
  std::optional<std::size_t> steps;
  bool converged = true;

  switch (spec.method) {
    case SolveMethod::closed: {
      const EquationSystem<S> system = raw.to_equation_system();
      solution = spec.fixpoint == FixpointKind::least ? solve_lfp_closed(system)
                                                      : solve_gfp_closed(system);
      break;
    }
    case SolveMethod::symbolic: {
      solution = solve_symbolic_raw(raw, spec.fixpoint);
      break;
    }
    case SolveMethod::kleene: {
      const EquationSystem<S> system = raw.to_equation_system();
      KleeneResult<S> kleene = kleene_iterate(
          system,
          spec.fixpoint == FixpointKind::least ? StartVector::zero : StartVector::one,
          spec.max_steps.value());
      solution = std::move(kleene.valuation);
      steps = kleene.steps;
      converged = kleene.converged;
      break;
    }
  }

  bool verified = true;
  if (spec.verify && converged) {
    std::string detail_out;
    verified = verify_solution(raw, solution, spec.fixpoint, spec.method, detail_out);
    if (!verified) result.error = "verification failed: " + detail_out;
  }

  Json doc = Json::object();
  Json values = Json::object();
  for (const std::string& name : raw.names)
    values[name] = value_to_json(raw.semiring, solution.at(name));
  doc["solution"] = std::move(values);
  doc["method"] = to_string(spec.method);
  if (steps) doc["steps"] = *steps;
  if (spec.verify && converged) doc["verified"] = verified;

  if (spec.output == OutputFormat::json) {
    result.output = doc.dump();
  } else {
    std::ostringstream text;
    for (const std::string& name : raw.names)
      text << name << " = " << raw.semiring.to_string(solution.at(name)) << "\n";
    text << "method = " << to_string(spec.method) << "\n";
    if (steps) text << "steps = " << *steps << "\n";
    if (spec.verify && converged) text << "verified = " << (verified ? "true" : "false") << "\n";
    result.output = text.str();
  }
  result.document = std::move(doc);

  if (!converged) {
    result.exit_code = kExitNoConvergence;
    result.error = "kleene iteration did not converge within " +
                   std::to_string(spec.max_steps.value()) + " steps";
  } else if (!verified) {
    result.exit_code = kExitVerificationFailed;
  }
  return result;
}

}  // namespace detail

/// Runs a whole job: load, parse, solve, optionally verify, render.
/// Exit codes: 0 success, 2 parse or validation error, 3 kleene
/// non-convergence, 4 verification mismatch.
inline JobResult run_job(const JobSpec& spec) {
  JobResult failure;
  failure.exit_code = kExitInputError;
  if (spec.method == SolveMethod::kleene && !spec.max_steps) {
    failure.error = "the kleene method requires --max-steps";
    return failure;
  }
  std::ifstream input(spec.input_path);
  if (!input) {
    failure.error = "cannot open input file '" + spec.input_path + "'";
    return failure;
  }
  Json doc;
  try {
    doc = Json::parse(input);
  } catch (const Json::parse_error& e) {
    failure.error = std::string("parse error: ") + e.what();
    return failure;
  }
  try {
    const ParsedSystem parsed = parse_system(doc, spec.method == SolveMethod::symbolic);
    return std::visit([&](const auto& raw) { return detail::run_typed(raw, spec); }, parsed);
  } catch (const ValidationError& e) {
    failure.error = e.what();
    return failure;
  }
}

}  // namespace sorpfix

#endif  // SORPFIX_IO_HPP
