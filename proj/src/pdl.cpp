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

#include "pgames/pdl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace pgames {

namespace {

constexpr double kWeightTolerance = 1e-9;

}  // namespace

const char* to_string(CompareOp op) {
  switch (op) {
    case CompareOp::kLess: return "<";
    case CompareOp::kLessEqual: return "<=";
    case CompareOp::kGreater: return ">";
    case CompareOp::kGreaterEqual: return ">=";
    case CompareOp::kEqual: return "==";
    case CompareOp::kNotEqual: return "!=";
  }
  return "?";
}

bool Comparison::holds(const Assignment& assignment) const {
  const double diff = lhs.evaluate(assignment) - rhs.evaluate(assignment);
  switch (op) {
    case CompareOp::kLess: return diff < 0.0;
    case CompareOp::kLessEqual: return diff <= 0.0;
    case CompareOp::kGreater: return diff > 0.0;
    case CompareOp::kGreaterEqual: return diff >= 0.0;
    case CompareOp::kEqual: return diff == 0.0;
    case CompareOp::kNotEqual: return diff != 0.0;
  }
  return false;
}

double prob_of(const ActionDistribution& dist, std::string_view action) {
  for (const auto& entry : dist) {
    if (entry.action == action) return entry.prob;
  }
  return 0.0;
}

ParamStrategy::ParamStrategy(std::vector<WeightedAction> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("a strategy needs at least one action");
  std::set<std::string> seen;
  int rest_count = 0;
  for (const auto& entry : entries_) {
    if (!seen.insert(entry.action).second) {
      throw DomainError("action '" + entry.action + "' appears twice in one strategy");
    }
    if (!entry.weight) ++rest_count;
  }
  if (rest_count > 1) throw DomainError("a strategy may contain at most one 'rest' weight");
}

ParamStrategy ParamStrategy::pure(std::string action) {
  return ParamStrategy({WeightedAction{std::move(action), std::nullopt}});
}

ParamStrategy ParamStrategy::constant(const std::vector<std::string>& actions,
                                      const std::vector<double>& weights) {
  if (actions.size() != weights.size()) {
    throw DimensionError("action and weight lists differ in length");
  }
  std::vector<WeightedAction> entries;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (i + 1 == actions.size()) {
      entries.push_back({actions[i], std::nullopt});
    } else {
      entries.push_back({actions[i], Expr::number(weights[i])});
    }
  }
  return ParamStrategy(std::move(entries));
}

ActionDistribution ParamStrategy::evaluate(const Assignment& assignment) const {
  ActionDistribution out;
  out.reserve(entries_.size());
  double explicit_sum = 0.0;
  std::optional<std::size_t> rest_index;
  for (const auto& entry : entries_) {
    if (!entry.weight) {
      rest_index = out.size();
      out.push_back({entry.action, 0.0});
      continue;
    }
    const double w = entry.weight->evaluate(assignment);
    if (!(w >= -kWeightTolerance && w <= 1.0 + kWeightTolerance)) {
      throw InvalidDistributionError("weight of '" + entry.action + "' is " + format_number(w) +
                                     ", outside [0, 1]");
    }
    explicit_sum += w;
    out.push_back({entry.action, w});
  }
  if (rest_index) {
    const double rest = 1.0 - explicit_sum;
    if (rest < -kWeightTolerance) {
      throw InvalidDistributionError("weights sum to " + format_number(explicit_sum) +
                                     ", leaving a negative rest");
    }
    out[*rest_index].prob = rest;
  } else if (std::fabs(explicit_sum - 1.0) > kWeightTolerance) {
    throw InvalidDistributionError("weights sum to " + format_number(explicit_sum) + ", not 1");
  }
  for (auto& entry : out) entry.prob = std::clamp(entry.prob, 0.0, 1.0);
  return out;
}

Pdl::Pdl(std::vector<std::string> params, std::vector<Rule> rules, ParamStrategy fallback)
    : params_(std::move(params)), rules_(std::move(rules)), fallback_(std::move(fallback)) {
  std::set<std::string> declared;
  for (const auto& name : params_) {
    if (!declared.insert(name).second) throw DomainError("parameter '" + name + "' declared twice");
  }
  std::set<std::string> used;
  for (const auto& rule : rules_) {
    if (rule.conditions.empty()) throw DomainError("every rule needs at least one condition");
    for (const auto& cond : rule.conditions) {
      cond.lhs.collect_params(used);
      cond.rhs.collect_params(used);
    }
    for (const auto& entry : rule.strategy.entries()) {
      if (entry.weight) entry.weight->collect_params(used);
    }
  }
  for (const auto& entry : fallback_.entries()) {
    if (entry.weight) entry.weight->collect_params(used);
  }
  for (const auto& name : used) {
    if (!declared.count(name)) throw DomainError("parameter '" + name + "' is not declared");
  }
}

std::size_t Pdl::width() const {
  std::size_t w = 0;
  for (const auto& rule : rules_) w = std::max(w, rule.conditions.size());
  return w;
}

PdlEvaluation evaluate_pdl(const Pdl& pdl, const Assignment& assignment) {
  for (const auto& name : pdl.params()) {
    if (!assignment.count(name)) throw EvaluationError("parameter '" + name + "' has no value");
  }
  for (std::size_t i = 0; i < pdl.rules().size(); ++i) {
    const Rule& rule = pdl.rules()[i];
    const bool all = std::all_of(rule.conditions.begin(), rule.conditions.end(),
                                 [&](const Comparison& c) { return c.holds(assignment); });
    if (all) return {rule.strategy.evaluate(assignment), i};
  }
  return {pdl.fallback().evaluate(assignment), std::nullopt};
}

std::string rule_label(const PdlEvaluation& evaluation) {
  if (!evaluation.rule) return "default";
  return "rule " + std::to_string(*evaluation.rule + 1);
}

std::vector<std::string> default_param_names(Eigen::Index dim) {
  if (dim == 1) return {"lambda"};
  std::vector<std::string> names;
  for (Eigen::Index i = 0; i < dim; ++i) names.push_back("l" + std::to_string(i + 1));
  return names;
}

Assignment make_assignment(const std::vector<std::string>& names,
                           const Eigen::Ref<const Eigen::VectorXd>& values) {
  if (static_cast<Eigen::Index>(names.size()) != values.size()) {
    throw DimensionError("assignment has " + std::to_string(values.size()) + " values for " +
                         std::to_string(names.size()) + " names");
  }
  Assignment out;
  for (std::size_t i = 0; i < names.size(); ++i) out[names[i]] = values[static_cast<Eigen::Index>(i)];
  return out;
}

namespace {

Expr distance_expr(const std::vector<std::string>& names, const Eigen::VectorXd& sample) {
  if (sample.size() == 1) return abs(Expr::param(names[0]) - Expr::number(sample[0]));
  std::optional<Expr> sum;
  for (Eigen::Index d = 0; d < sample.size(); ++d) {
    Expr diff = Expr::param(names[static_cast<std::size_t>(d)]) - Expr::number(sample[d]);
    Expr sq = diff * diff;
    sum = sum ? *sum + sq : sq;
  }
  return *sum;
}

}  // namespace

Pdl build_nn_pdl(const Eigen::MatrixXd& samples, std::vector<ParamStrategy> strategies,
                 std::vector<std::string> param_names) {
  const Eigen::Index t = samples.cols();
  if (t == 0) throw DomainError("nearest-sample list needs at least one sample");
  if (static_cast<Eigen::Index>(strategies.size()) != t) {
    throw DimensionError(std::to_string(t) + " samples but " + std::to_string(strategies.size()) +
                         " strategies");
  }
  if (param_names.empty()) param_names = default_param_names(samples.rows());
  if (static_cast<Eigen::Index>(param_names.size()) != samples.rows()) {
    throw DimensionError("parameter names do not match the sample dimension");
  }

  std::vector<Expr> dist;
  dist.reserve(static_cast<std::size_t>(t));
  for (Eigen::Index i = 0; i < t; ++i) dist.push_back(distance_expr(param_names, samples.col(i)));

  std::vector<Rule> rules;
  for (Eigen::Index j = 0; j + 1 < t; ++j) {
    std::vector<Comparison> conditions;
    for (Eigen::Index i = 0; i < t; ++i) {
      if (i == j) continue;
      conditions.push_back({dist[static_cast<std::size_t>(i)], CompareOp::kGreaterEqual,
                            dist[static_cast<std::size_t>(j)]});
    }
    rules.push_back({std::move(conditions), strategies[static_cast<std::size_t>(j)]});
  }
  return Pdl(std::move(param_names), std::move(rules), std::move(strategies.back()));
}

std::string describe(const Assignment& assignment) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, value] : assignment) {
    if (!first) os << ", ";
    first = false;
    os << name << "=" << format_number(value);
  }
  return os.str();
}

ImplementabilityReport check_implementability(const Pdl& pdl, const ObjectiveAdapter& family,
                                              const std::vector<Assignment>& grid) {
  if (grid.empty()) throw DomainError("implementability check needs at least one grid point");
  ImplementabilityReport report;
  report.depth = pdl.depth();
  report.width = pdl.width();
  report.epsilon = -std::numeric_limits<double>::infinity();
  for (const auto& point : grid) {
    double gap = 0.0;
    try {
      const PdlEvaluation eval = evaluate_pdl(pdl, point);
      gap = family.optimal(point) - family.achieved(point, eval);
    } catch (const std::exception& e) {
      throw ImplementabilityError(point, "at " + describe(point) + ": " + e.what());
    }
    if (gap > report.epsilon) {
      report.epsilon = gap;
      report.worst = point;
    }
  }
  return report;
}

}  // namespace pgames
