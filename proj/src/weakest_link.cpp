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


#include "pgames/weakest_link.hpp"

#include <algorithm>
#include <cmath>

namespace pgames::weakest_link {

void Params::validate() const {
  if (!(std::isfinite(w) && w > 0.0)) throw ParameterError("w", "w must be a positive bank amount");
  require_probability("p1", p1);
  require_probability("p2", p2);
  require_probability("y1", y1);
  require_probability("y2", y2);
  if (!(p1 > p2)) throw ParameterError("p2", "p2 must be below p1 (player 2 is the stronger)");
}

double tie_ev(const Params& params) { return params.w * (params.p1 + params.p2) / 3.0; }

std::pair<double, double> case_probs(const Params& params) {
  const double c1 = params.y1 * (1.0 - params.y2);
  const double c2 = params.y2 * (1.0 - params.y1);
  const double total = c1 + c2;
  if (total == 0.0) {
    throw DegenerateInputError("no split-vote case has positive probability (your vote is irrelevant)");
  }
  return {c1 / total, c2 / total};
}

double ev_vote_paper(Vote target, const Params& params) {
  const auto [c1, c2] = case_probs(params);
  const double tie = tie_ev(params);
  if (target == Vote::kPlayer1) return c1 * params.p2 * params.w + c2 * tie;
  return c1 * tie + c2 * params.p1 * params.w;
}

double paper_rule_margin(const Params& params) {
  const double p1 = params.p1, p2 = params.p2, y1 = params.y1, y2 = params.y2;
  const double lhs = 2.0 * y1 * p2 + y2 * p2 + 3.0 * y1 * y2 * p1;
  const double rhs = 2.0 * y2 * p1 + y1 * p1 + 3.0 * y1 * y2 * p2;
  return lhs - rhs;
}

Vote decide_vote_paper(const Params& params) {
  return paper_rule_margin(params) >= -kTieTolerance ? Vote::kPlayer1 : Vote::kPlayer2;
}

double ev_vote_full(Vote target, const Params& params) {
  const double y1 = params.y1, y2 = params.y2;
  const double case1 = y1 * (1.0 - y2);
  const double case2 = (1.0 - y1) * y2;
  const double pivotal = (1.0 - y1) * (1.0 - y2);
  const double tie = tie_ev(params);
  const double vs1 = params.p1 * params.w;  // final against player 1
  const double vs2 = params.p2 * params.w;
  if (target == Vote::kPlayer1) return case1 * vs2 + case2 * tie + pivotal * vs2;
  return case1 * tie + case2 * vs1 + pivotal * vs1;
}

Vote decide_vote_full(const Params& params) {
  // Both EVs are linear in W; compare at W = 1 so the tie band does not
  // depend on the bank.
  Params unit = params;
  unit.w = 1.0;
  return ev_vote_full(Vote::kPlayer1, unit) - ev_vote_full(Vote::kPlayer2, unit) > kTieTolerance
             ? Vote::kPlayer1
             : Vote::kPlayer2;
}

double paper_difference(const Params& params) {
  const double case1 = params.y1 * (1.0 - params.y2);
  const double case2 = (1.0 - params.y1) * params.y2;
  const double tie = tie_ev(params);
  return case1 * (tie - params.p2 * params.w) + case2 * (params.p1 * params.w - tie);
}

double full_difference(const Params& params) {
  return ev_vote_full(Vote::kPlayer2, params) - ev_vote_full(Vote::kPlayer1, params);
}

AgreementReport agreement_report(double step, double w) {
  if (!(step > 0.0 && step <= 0.5)) throw ParameterError("step", "grid step must lie in (0, 0.5]");
  if (!(std::isfinite(w) && w > 0.0)) throw ParameterError("w", "w must be a positive bank amount");
  const int last = static_cast<int>(std::floor(1.0 / step + 1e-9));
  std::vector<double> grid;
  for (int i = 0; i <= last; ++i) grid.push_back(std::min(1.0, i * step));

  AgreementReport report;
  report.step = step;
  for (double p1 : grid) {
    for (double p2 : grid) {
      if (!(p1 > p2)) continue;
      for (double y1 : grid) {
        for (double y2 : grid) {
          const Params params{w, p1, p2, y1, y2};
          ++report.cells;
          if (decide_vote_paper(params) == decide_vote_full(params)) {
            ++report.agreements;
          } else {
            report.disagreements.push_back(params);
          }
        }
      }
    }
  }
  report.fraction = report.cells ? static_cast<double>(report.agreements) / report.cells : 1.0;
  return report;
}

}  // namespace pgames::weakest_link
