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

#ifndef SORPFIX_DERIVATION_HPP
#define SORPFIX_DERIVATION_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqsys.hpp"
#include "semiring.hpp"

namespace sorpfix {

/// Raised when an enumeration would materialize more nodes than its budget
/// allows. Distinct from an empty result on purpose: a check that receives
/// this error must not count as passed.
class EnumerationBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultNodeBudget = 10000;

/// Shape of a depth-bounded derivation tree. A node above the cut records
/// which (coefficient, monomial) pair of its variable's equation it picked;
/// its children realize that monomial, one subtree per occurrence of each
/// indeterminate. Nodes at the cut depth are boundary leaves whose yield is
/// supplied later by the valuation handed to tree_yield. Children are
/// unordered in the model; they are stored in a canonical order (monomial
/// name order, then shape enumeration order) so each shape appears once.
struct TruncatedDerivationTree {
  std::string var;
  std::optional<std::size_t> term_index;  // nullopt: boundary leaf at the cut
  std::vector<std::shared_ptr<const TruncatedDerivationTree>> children;
  std::size_t node_count = 1;

  bool is_boundary() const { return !term_index.has_value(); }

  bool has_boundary() const {
    if (is_boundary()) return true;
    for (const auto& child : children)
      if (child->has_boundary()) return true;
    return false;
  }
};

using TreePtr = std::shared_ptr<const TruncatedDerivationTree>;

inline bool operator==(const TruncatedDerivationTree& a, const TruncatedDerivationTree& b) {
  if (&a == &b) return true;
  if (a.var != b.var || a.term_index != b.term_index || a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (a.children[i] != b.children[i] && !(*a.children[i] == *b.children[i])) return false;
  return true;
}

namespace detail {

template <Semiring S>
class TruncationEnumerator {
 public:
  TruncationEnumerator(const EquationSystem<S>& system, std::size_t budget)
      : system_(system), budget_(budget) {}

  /// All truncation shapes of derivation trees from `var`, cut at `depth`.
  /// Boundary leaves are generated at the cut regardless of whether the
  /// variable admits a complete tree below it; this makes the shape sums
  /// satisfy the operator recurrence even for empty right-hand sides.
  std::vector<TreePtr> enumerate(const std::string& var, std::size_t depth) {
    const auto key = std::make_pair(var, depth);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::vector<TreePtr> shapes;
    if (depth == 0) {
      shapes.push_back(make_node(var, std::nullopt, {}));
    } else {
      const SysPolynomial<S>& poly = system_.rhs(var);
      for (std::size_t t = 0; t < poly.terms().size(); ++t) {
        const SysMonomial& monomial = poly.terms()[t].monomial;
        std::vector<std::vector<std::vector<TreePtr>>> groups;
        bool feasible = true;
        for (const auto& [child_var, exponent] : monomial.exponents()) {
          std::vector<TreePtr> child_shapes = enumerate(child_var, depth - 1);
          std::vector<std::vector<TreePtr>> multisets = multisets_of(child_shapes, exponent);
          if (multisets.empty()) {
            feasible = false;
            break;
          }
          groups.push_back(std::move(multisets));
        }
        if (!feasible) continue;
        std::vector<std::vector<TreePtr>> child_lists = cartesian(groups);
        for (std::vector<TreePtr>& children : child_lists)
          shapes.push_back(make_node(var, t, std::move(children)));
      }
    }
    memo_.emplace(key, shapes);
    return shapes;
  }

 private:
  TreePtr make_node(std::string var, std::optional<std::size_t> term_index,
                    std::vector<TreePtr> children) {
    auto node = std::make_shared<TruncatedDerivationTree>();
    node->var = std::move(var);
    node->term_index = term_index;
    node->children = std::move(children);
    for (const TreePtr& child : node->children) node->node_count += child->node_count;
    used_ += node->node_count;
    if (used_ > budget_)
      throw EnumerationBudgetError("derivation tree enumeration exceeded its node budget of " +
                                   std::to_string(budget_));
    return node;
  }

  /// Multisets of size `count` drawn from `items`, as non-decreasing index
  /// sequences.
  static std::vector<std::vector<TreePtr>> multisets_of(const std::vector<TreePtr>& items,
                                                        std::uint64_t count) {
    std::vector<std::vector<TreePtr>> out;
    std::vector<TreePtr> current;
    const auto recurse = [&](auto&& self, std::size_t from, std::uint64_t remaining) -> void {
      if (remaining == 0) {
        out.push_back(current);
        return;
      }
      for (std::size_t i = from; i < items.size(); ++i) {
        current.push_back(items[i]);
        self(self, i, remaining - 1);
        current.pop_back();
      }
    };
    recurse(recurse, 0, count);
    return out;
  }

  static std::vector<std::vector<TreePtr>> cartesian(
      const std::vector<std::vector<std::vector<TreePtr>>>& groups) {
    std::vector<std::vector<TreePtr>> out{{}};
    for (const auto& group : groups) {
      std::vector<std::vector<TreePtr>> next;
      for (const std::vector<TreePtr>& prefix : out) {
        for (const std::vector<TreePtr>& choice : group) {
          std::vector<TreePtr> combined = prefix;
          combined.insert(combined.end(), choice.begin(), choice.end());
          next.push_back(std::move(combined));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  const EquationSystem<S>& system_;
  std::size_t budget_;
  std::size_t used_ = 0;
  std::map<std::pair<std::string, std::size_t>, std::vector<TreePtr>> memo_;
};

}  // namespace detail

/// Enumerates every depth-bounded truncation shape of the derivation trees
/// from `var` that are compatible with the system. Exponential in the depth;
/// exceeding the node budget raises EnumerationBudgetError.
template <Semiring S>
std::vector<TreePtr> enumerate_truncations(const EquationSystem<S>& system, const std::string& var,
                                           std::size_t depth,
                                           std::size_t node_budget = kDefaultNodeBudget) {
  system.rhs(var);  // rejects undeclared indeterminates
  return detail::TruncationEnumerator<S>(system, node_budget).enumerate(var, depth);
}

/// Product of all node yields: coefficients for inner nodes, the boundary
/// valuation for leaves at the cut depth.
template <Semiring S>
value_t<S> tree_yield(const S& s, const TruncatedDerivationTree& tree,
                      const EquationSystem<S>& system, const Valuation<S>& boundary) {
  if (tree.is_boundary()) {
    const auto it = boundary.find(tree.var);
    if (it == boundary.end())
      throw std::invalid_argument("boundary valuation misses indeterminate '" + tree.var + "'");
    return it->second;
  }
  const auto& terms = system.rhs(tree.var).terms();
  if (*tree.term_index >= terms.size())
    throw std::invalid_argument("tree does not belong to this system");
  value_t<S> product = terms[*tree.term_index].coeff;
  for (const TreePtr& child : tree.children)
    product = s.mul(product, tree_yield(s, *child, system, boundary));
  return product;
}

template <Semiring S>
struct TreeIterationReport {
  std::map<std::string, bool> component_equal;
  bool all_equal = true;
  Valuation<S> operator_iterate;
  Valuation<S> truncation_sums;
};

/// Compares F^n(b), computed by iterating the operator, against the sum of
/// yields over all depth-n truncation shapes, component by component.
template <Semiring S>
TreeIterationReport<S> tree_iteration_check(const EquationSystem<S>& system,
                                            const Valuation<S>& boundary, std::size_t n,
                                            std::size_t node_budget = kDefaultNodeBudget) {
  const S& s = system.semiring();
  TreeIterationReport<S> report;
  report.operator_iterate = iterate_operator(system, boundary, n);
  for (const std::string& name : system.names()) {
    value_t<S> sum = s.zero();
    for (const TreePtr& tree : enumerate_truncations(system, name, n, node_budget))
      sum = s.add(sum, tree_yield(s, *tree, system, boundary));
    const bool equal = s.equals(sum, report.operator_iterate.at(name));
    report.component_equal.emplace(name, equal);
    report.all_equal = report.all_equal && equal;
    report.truncation_sums.emplace(name, std::move(sum));
  }
  return report;
}

template <Semiring S>
struct ExtremeFixedPoints {
  Valuation<S> least;
  Valuation<S> greatest;
  std::size_t fixed_point_count = 0;
};

/// Exhaustive fixed-point search over a finite carrier: enumerates all
/// |K|^l valuations, keeps the exact fixed points and returns the
/// componentwise least and greatest among them.
template <FiniteSemiring S>
ExtremeFixedPoints<S> brute_force_extreme_fixed_points(const EquationSystem<S>& system,
                                                       std::size_t budget = kDefaultNodeBudget) {
  const S& s = system.semiring();
  const std::vector<value_t<S>> carrier = s.carrier();
  const std::size_t l = system.size();

  std::size_t total = 1;
  for (std::size_t i = 0; i < l; ++i) {
    if (total > budget / carrier.size())
      throw EnumerationBudgetError("brute-force search space exceeds its budget of " +
                                   std::to_string(budget));
    total *= carrier.size();
  }

  std::vector<Valuation<S>> fixed_points;
  std::vector<std::size_t> odometer(l, 0);
  while (true) {
    Valuation<S> v;
    for (std::size_t i = 0; i < l; ++i)
      v.emplace(system.names()[i], static_cast<value_t<S>>(carrier[odometer[i]]));
    if (valuation_equal(s, apply_operator(system, v), v)) fixed_points.push_back(std::move(v));

    std::size_t pos = 0;
    while (pos < l && ++odometer[pos] == carrier.size()) odometer[pos++] = 0;
    if (pos == l) break;
  }

  const auto find_extreme = [&](bool least) -> const Valuation<S>* {
    for (const Valuation<S>& candidate : fixed_points) {
      bool extreme = true;
      for (const Valuation<S>& other : fixed_points) {
        const bool ok = least ? valuation_leq(s, candidate, other)
                              : valuation_leq(s, other, candidate);
        if (!ok) {
          extreme = false;
          break;
        }
      }
      if (extreme) return &candidate;
    }
    return nullptr;
  };

  const Valuation<S>* least = find_extreme(true);
  const Valuation<S>* greatest = find_extreme(false);
  if (least == nullptr || greatest == nullptr)
    throw std::logic_error("no extreme fixed point among the enumerated fixed points");
  return {*least, *greatest, fixed_points.size()};
}

}  // namespace sorpfix

#endif  // SORPFIX_DERIVATION_HPP
