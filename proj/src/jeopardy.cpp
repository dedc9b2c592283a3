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


#include "pgames/jeopardy.hpp"

#include "pgames/bundled.hpp"
#include "pgames/pdl_text.hpp"

namespace pgames::jeopardy {

void Params::validate() const {
  require_probability("p1", p1);
  require_probability("p2", p2);
}

const Pdl& cheat_sheet(int player) {
  if (player == 1) return bundled_pdl("jeopardy_p1");
  if (player == 2) return bundled_pdl("jeopardy_p2");
  throw ParameterError("player", "player must be 1 or 2");
}

namespace {

Assignment assignment_of(const Params& params) {
  return {{"p1", params.p1}, {"p2", params.p2}};
}

}  // namespace

Advice advise(int player, const Params& params) {
  params.validate();
  const Pdl& pdl = cheat_sheet(player);
  PdlEvaluation eval = evaluate_pdl(pdl, assignment_of(params));
  Advice advice{std::move(eval.strategy), "mixed", eval.rule};
  if (eval.rule) {
    const Rule& rule = pdl.rules()[*eval.rule];
    advice.branch.clear();
    for (std::size_t i = 0; i < rule.conditions.size(); ++i) {
      if (i) advice.branch += " and ";
      advice.branch += render_condition(rule.conditions[i]);
    }
  }
  return advice;
}

MixedStrategy<double> to_mixed(const ActionDistribution& dist, int player) {
  const int bank = player == 1 ? kBank1 : kBank2;
  MixedStrategy<double> s = MixedStrategy<double>::Zero(bank + 1);
  for (const auto& entry : dist) {
    bool matched = false;
    for (int w = 0; w <= bank; ++w) {
      if (entry.action == "wager" + std::to_string(w)) {
        s[w] += entry.prob;
        matched = true;
      }
    }
    if (!matched) throw DomainError("'" + entry.action + "' is not a wager of player " + std::to_string(player));
  }
  return s;
}

StrategyProfile<double> advised_profile(const Params& params) {
  return {to_mixed(advise(1, params).strategy, 1), to_mixed(advise(2, params).strategy, 2)};
}

std::string equilibrium_case(const Params& params) {
  params.validate();
  const double p1 = params.p1, p2 = params.p2;
  if (p2 == 0.0) return "(0,0)";
  if (p1 == 0.0) return "(0,3)";
  if (p1 == 1.0) return "(2,0)";
  if (p1 >= 0.5 && p2 >= 0.5) return "(2,2)";
  if (p1 < 0.5 && p2 >= 0.5) return "(2,3)";
  return "mixed";
}

double verify_equilibrium(const Params& params) {
  return max_regret(payoff_matrix(params), advised_profile(params));
}

double mixed_branch_row_value(const Params& params) {
  params.validate();
  const double p1 = params.p1, p2 = params.p2;
  const double den = 1.0 + p1 * p2 - p1;
  if (den == 0.0) throw DegenerateInputError("mixed-line value is undefined at p1 = 1, p2 = 0");
  return (0.5 + 2.0 * p1 * p2 - 0.5 * p1 - 0.5 * p1 * p1 * p2 - p2) / den;
}

}  // namespace pgames::jeopardy
