// Copyright 2026 The pgames Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Parametric decision lists.
//
// A list is an ordered sequence of rules "if c1 and c2 and ... -> strategy"
// followed by a fallback strategy. Each condition compares two expressions of
// the parameters; the first rule whose conditions all hold selects the
// strategy. Strategy weights are themselves expressions, so one rule can
// describe a parameter-dependent mixture.

#ifndef PGAMES_PDL_HPP_
#define PGAMES_PDL_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pgames/common.hpp"
#include "pgames/expr.hpp"

namespace pgames {

enum class CompareOp { kLess, kLessEqual, kGreater, kGreaterEqual, kEqual, kNotEqual };

const char* to_string(CompareOp op);

// lhs op rhs, evaluated as (lhs - rhs) op 0 with no tolerance band.
struct Comparison {
  Expr lhs;
  CompareOp op;
  Expr rhs;

  bool holds(const Assignment& assignment) const;
};

struct ActionProb {
  std::string action;
  double prob;
};

using ActionDistribution = std::vector<ActionProb>;

// Probability of `action`, 0 when absent.
double prob_of(const ActionDistribution& dist, std::string_view action);

class InvalidDistributionError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct WeightedAction {
  std::string action;
  // nullopt means "rest": one minus the sum of the other weights.
  std::optional<Expr> weight;
};

class ParamStrategy {
 public:
  // Throws DomainError on an empty list, a repeated action, or more than one
  // rest weight.
  explicit ParamStrategy(std::vector<WeightedAction> entries);

  static ParamStrategy pure(std::string action);
  // Constant weights; the last action takes the rest.
  static ParamStrategy constant(const std::vector<std::string>& actions,
                                const std::vector<double>& weights);

  const std::vector<WeightedAction>& entries() const { return entries_; }
  bool is_pure() const { return entries_.size() == 1 && !entries_.front().weight; }

  // Weights must land in [0, 1] and sum to 1 within 1e-9; anything else
  // throws InvalidDistributionError.
  ActionDistribution evaluate(const Assignment& assignment) const;

 private:
  std::vector<WeightedAction> entries_;
};

struct Rule {
  std::vector<Comparison> conditions;
  ParamStrategy strategy;
};

class Pdl {
 public:
  // Throws DomainError when a rule has no conditions, a parameter name
  // repeats, or an expression references an undeclared parameter.
  Pdl(std::vector<std::string> params, std::vector<Rule> rules, ParamStrategy fallback);

  const std::vector<std::string>& params() const { return params_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const ParamStrategy& fallback() const { return fallback_; }

  // Number of strategies: rules plus the fallback.
  std::size_t depth() const { return rules_.size() + 1; }
  // Most conditions in any rule; the fallback counts as width 0.
  std::size_t width() const;

 private:
  std::vector<std::string> params_;
  std::vector<Rule> rules_;
  ParamStrategy fallback_;
};

struct PdlEvaluation {
  ActionDistribution strategy;
  // 0-based index of the matching rule; nullopt when the fallback applied.
  std::optional<std::size_t> rule;
};

PdlEvaluation evaluate_pdl(const Pdl& pdl, const Assignment& assignment);

// Human-facing label of the matched line: "rule 3" or "default".
std::string rule_label(const PdlEvaluation& evaluation);

// Nearest-sample decision list. `samples` holds one parameter vector per
// column. Rule j plays strategies[j] when sample j is at least as close as
// every other sample, so ties go to the lowest index; the last sample is the
// fallback. One-dimensional samples use |lambda - s|, higher dimensions the
// squared Euclidean distance (same ordering as L2).
Pdl build_nn_pdl(const Eigen::MatrixXd& samples, std::vector<ParamStrategy> strategies,
                 std::vector<std::string> param_names = {});

// Default names used by build_nn_pdl: "lambda" in one dimension, else
// "l1".."ld".
std::vector<std::string> default_param_names(Eigen::Index dim);

Assignment make_assignment(const std::vector<std::string>& names,
                           const Eigen::Ref<const Eigen::VectorXd>& values);

// Objective of a parametrized game family, used to measure how far a list's
// output falls short of the best achievable objective.
struct ObjectiveAdapter {
  std::function<double(const Assignment&)> optimal;
  std::function<double(const Assignment&, const PdlEvaluation&)> achieved;
};

struct ImplementabilityReport {
  std::size_t depth = 0;
  std::size_t width = 0;
  double epsilon = 0.0;
  Assignment worst;
};

class ImplementabilityError : public DomainError {
 public:
  ImplementabilityError(Assignment at, const std::string& message)
      : DomainError(message), at_(std::move(at)) {}
  const Assignment& at() const { return at_; }

 private:
  Assignment at_;
};

ImplementabilityReport check_implementability(const Pdl& pdl, const ObjectiveAdapter& family,
                                              const std::vector<Assignment>& grid);

std::string describe(const Assignment& assignment);

}  // namespace pgames

#endif  // PGAMES_PDL_HPP_
