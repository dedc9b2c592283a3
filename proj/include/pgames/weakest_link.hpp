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


// Final voting round of Weakest Link with three contestants.
//
// You face players 1 and 2; player 2 is the stronger (p1 > p2). Each opponent
// votes for you with probability y_i and otherwise for the other opponent.
// The contestant with the most votes leaves; a three-way split eliminates
// each contestant with probability 1/3. The survivor of the final pays W.

#ifndef PGAMES_WEAKEST_LINK_HPP_
#define PGAMES_WEAKEST_LINK_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "pgames/common.hpp"

namespace pgames::weakest_link {

enum class Vote { kPlayer1, kPlayer2 };

inline const char* to_string(Vote vote) {
  return vote == Vote::kPlayer1 ? "player1" : "player2";
}

struct Params {
  double w;   // bank, W > 0
  double p1;  // your win probability head-to-head against player 1
  double p2;  // ... against player 2
  double y1;  // player 1 votes for you
  double y2;  // player 2 votes for you

  // Throws ParameterError naming the offending field.
  void validate() const;
};

// W (p1 + p2) / 3.
double tie_ev(const Params& params);

// Probabilities of the two split-vote cases, normalized to sum to one:
// (player 1 votes for you and player 2 for player 1, the mirror case).
// Throws DegenerateInputError when neither case has mass.
std::pair<double, double> case_probs(const Params& params);

double ev_vote_paper(Vote target, const Params& params);

// LHS - RHS of 2 y1 p2 + y2 p2 + 3 y1 y2 p1 >= 2 y2 p1 + y1 p1 + 3 y1 y2 p2.
double paper_rule_margin(const Params& params);

// Margins within this of zero are ties. Both margins are computed at W = 1,
// where rounding noise at an exact tie stays near 1e-16.
inline constexpr double kTieTolerance = 1e-12;

// Player 1 on ties. Total for every valid input, W included or not.
Vote decide_vote_paper(const Params& params);

// All four opponent vote profiles, including the one where both vote for
// each other and your vote decides the final. Both-vote-for-you pays 0.
double ev_vote_full(Vote target, const Params& params);

// Player 2 on ties.
Vote decide_vote_full(const Params& params);

// EV(vote P2) - EV(vote P1) over the two split-vote cases, weighted by their
// unnormalized probabilities. Equals -W * paper_rule_margin / 3.
double paper_difference(const Params& params);

// EV(vote P2) - EV(vote P1) with all four profiles.
double full_difference(const Params& params);

struct AgreementReport {
  double step = 0.0;
  std::size_t cells = 0;
  std::size_t agreements = 0;
  double fraction = 0.0;
  std::vector<Params> disagreements;  // scan order: p1, p2, y1, y2
};

// Scans p1 > p2 and y1, y2 over {0, step, ..., 1} at bank w.
AgreementReport agreement_report(double step, double w = 1.0);

}  // namespace pgames::weakest_link

#endif  // PGAMES_WEAKEST_LINK_HPP_
