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


// Simplified two-player Final Jeopardy with banks 5 and 3.
//
// Player 1 wagers 0..5 (rows), player 2 wagers 0..3 (columns). A win pays
// 0.5, a loss -0.5, a tie 0, so the game is zero-sum.

#ifndef PGAMES_JEOPARDY_HPP_
#define PGAMES_JEOPARDY_HPP_

#include <optional>
#include <string>

#include "pgames/pdl.hpp"
#include "pgames/strategic.hpp"

namespace pgames::jeopardy {

inline constexpr int kBank1 = 5;
inline constexpr int kBank2 = 3;

struct Params {
  double p1;  // player 1 answers correctly
  double p2;  // player 2 answers correctly

  // Throws ParameterError naming "p1" or "p2".
  void validate() const;
};

// Row player's payoff for wager w1 against w2, written out case by case.
template <typename Scalar>
Scalar payoff(Scalar p1, Scalar p2, int w1, int w2) {
  const Scalar h(0.5);
  const Scalar mixed_tie = h * p1 * p2 + h * p1 - h * p2;  // P1 right, or both wrong ties
  const Scalar p1_sure = p1 - h;                            // P1 wins iff right
  const Scalar p2_risk = h - p2 + p1 * p2;                  // P2 wins iff right and P1 wrong
  switch (w1) {
    case 0: {
      const Scalar row[] = {h, h, h - h * p2, h - p2};
      return row[w2];
    }
    case 1: {
      // Against wager 2 player 1 loses only when wrong while player 2 is right:
      // 0.5 - (1 - p1) p2, not 0.5 - p2.
      const Scalar row[] = {h, h * p1 * p2 - h * p2 + h, p2_risk, h + h * p1 * p2 - p2};
      return row[w2];
    }
    case 2: {
      const Scalar row[] = {h * p1, p2_risk, p2_risk, p2_risk};
      return row[w2];
    }
    case 3: {
      const Scalar row[] = {p1_sure, mixed_tie, p2_risk, p2_risk};
      return row[w2];
    }
    case 4: {
      const Scalar row[] = {p1_sure, p1_sure, mixed_tie, p2_risk};
      return row[w2];
    }
    case 5: {
      const Scalar row[] = {p1_sure, p1_sure, p1_sure, mixed_tie};
      return row[w2];
    }
    default:
      throw DomainError("player 1 wager out of range");
  }
}

template <typename Scalar = double>
BimatrixGame<Scalar> payoff_matrix(Scalar p1, Scalar p2) {
  Matrix<Scalar> u(kBank1 + 1, kBank2 + 1);
  for (int i = 0; i <= kBank1; ++i) {
    for (int j = 0; j <= kBank2; ++j) u(i, j) = payoff(p1, p2, i, j);
  }
  return BimatrixGame<Scalar>::zero_sum(std::move(u));
}

inline BimatrixGame<double> payoff_matrix(const Params& params) {
  params.validate();
  return payoff_matrix<double>(params.p1, params.p2);
}

// Cheat sheet for player 1 or 2 (the bundled jeopardy_p1 / jeopardy_p2).
const Pdl& cheat_sheet(int player);

struct Advice {
  ActionDistribution strategy;  // over "wager0".."wagerX"
  // Text of the matched condition ("p2 == 0"), or "mixed" for the last line.
  std::string branch;
  std::optional<std::size_t> rule;
};

Advice advise(int player, const Params& params);

// Wager distribution as a vector indexed by wager amount.
MixedStrategy<double> to_mixed(const ActionDistribution& dist, int player);

StrategyProfile<double> advised_profile(const Params& params);

// First matching line of the equilibrium case list: "(0,0)", "(0,3)",
// "(2,0)", "(2,2)", "(2,3)" or "mixed".
std::string equilibrium_case(const Params& params);

// max_regret of the advised profile in payoff_matrix(params).
double verify_equilibrium(const Params& params);

// Row player's value on the mixed line, in closed form:
// (0.5 + 2 p1 p2 - 0.5 p1 - 0.5 p1^2 p2 - p2) / (1 + p1 p2 - p1).
double mixed_branch_row_value(const Params& params);

}  // namespace pgames::jeopardy

#endif  // PGAMES_JEOPARDY_HPP_
