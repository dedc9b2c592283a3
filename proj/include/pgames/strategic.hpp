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

// Finite two-player strategic-form games.
//
// Everything here is a free function over small dense Eigen types, templated
// on the scalar so the same code runs in double and in exact arithmetic where
// the scalar supports it. Payoff matrices are indexed [row action, column
// action] for both players.

#ifndef PGAMES_STRATEGIC_HPP_
#define PGAMES_STRATEGIC_HPP_

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "pgames/common.hpp"

namespace pgames {

enum class Side { kRow, kCol };

inline Side opponent(Side side) {
  return side == Side::kRow ? Side::kCol : Side::kRow;
}

inline const char* to_string(Side side) {
  return side == Side::kRow ? "row" : "col";
}

template <typename Scalar>
using MixedStrategy = Vector<Scalar>;

template <typename Scalar = double>
struct StrategyProfile {
  MixedStrategy<Scalar> row;
  MixedStrategy<Scalar> col;

  const MixedStrategy<Scalar>& of(Side side) const {
    return side == Side::kRow ? row : col;
  }
};

template <typename Scalar = double>
struct PayoffPair {
  Scalar row;
  Scalar col;

  Scalar of(Side side) const { return side == Side::kRow ? row : col; }
};

template <typename Scalar = double>
class BimatrixGame {
 public:
  // General-sum game. Both matrices are m x k.
  BimatrixGame(Matrix<Scalar> row_payoffs, Matrix<Scalar> col_payoffs)
      : row_(std::move(row_payoffs)), col_(std::move(col_payoffs)) {
    if (row_.rows() < 1 || row_.cols() < 1) {
      throw DimensionError("a game needs at least one action per player");
    }
    if (row_.rows() != col_.rows() || row_.cols() != col_.cols()) {
      throw DimensionError("row and column payoff matrices differ in shape");
    }
  }

  // Zero-sum game given the row player's payoffs; the column player's are
  // the exact negation.
  static BimatrixGame zero_sum(Matrix<Scalar> row_payoffs) {
    Matrix<Scalar> col = -row_payoffs;
    BimatrixGame game(std::move(row_payoffs), std::move(col));
    game.zero_sum_ = true;
    return game;
  }

  Eigen::Index rows() const { return row_.rows(); }
  Eigen::Index cols() const { return row_.cols(); }
  Eigen::Index num_actions(Side side) const {
    return side == Side::kRow ? rows() : cols();
  }
  bool is_zero_sum() const { return zero_sum_; }

  const Matrix<Scalar>& payoffs(Side side) const {
    return side == Side::kRow ? row_ : col_;
  }

 private:
  Matrix<Scalar> row_;
  Matrix<Scalar> col_;
  bool zero_sum_ = false;
};

template <typename Scalar>
bool is_mixed_strategy(const MixedStrategy<Scalar>& s,
                       double tolerance = kTieTolerance) {
  if (s.size() == 0) return false;
  Scalar total(0);
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] < Scalar(0)) return false;
    total += s[i];
  }
  Scalar gap = total - Scalar(1);
  if (gap < Scalar(0)) gap = -gap;
  return gap <= Scalar(tolerance);
}

template <typename Scalar = double>
MixedStrategy<Scalar> pure_strategy(Eigen::Index size, Eigen::Index action) {
  MixedStrategy<Scalar> s = MixedStrategy<Scalar>::Zero(size);
  s[action] = Scalar(1);
  return s;
}

namespace internal {

template <typename Scalar>
void check_strategy(const BimatrixGame<Scalar>& game, Side side,
                    const MixedStrategy<Scalar>& s) {
  if (s.size() != game.num_actions(side)) {
    throw DimensionError(std::string(to_string(side)) + " strategy has " +
                         std::to_string(s.size()) + " entries, game has " +
                         std::to_string(game.num_actions(side)) + " actions");
  }
}

// Payoff to `side` of each of its pure actions against the opponent's mixed
// strategy.
template <typename Scalar>
Vector<Scalar> action_values(const BimatrixGame<Scalar>& game, Side side,
                             const MixedStrategy<Scalar>& opp) {
  check_strategy(game, opponent(side), opp);
  if (side == Side::kRow) return game.payoffs(Side::kRow) * opp;
  return game.payoffs(Side::kCol).transpose() * opp;
}

}  // namespace internal

template <typename Scalar>
PayoffPair<Scalar> expected_utility(const BimatrixGame<Scalar>& game,
                                    const StrategyProfile<Scalar>& profile) {
  internal::check_strategy(game, Side::kRow, profile.row);
  internal::check_strategy(game, Side::kCol, profile.col);
  return {profile.row.dot(game.payoffs(Side::kRow) * profile.col),
          profile.row.dot(game.payoffs(Side::kCol) * profile.col)};
}

template <typename Scalar = double>
struct BestResponse {
  Scalar value;
  // Every pure action whose payoff is within kTieTolerance of `value`.
  std::vector<Eigen::Index> actions;
};

template <typename Scalar>
BestResponse<Scalar> best_response(const BimatrixGame<Scalar>& game, Side side,
                                   const MixedStrategy<Scalar>& opp) {
  const Vector<Scalar> values = internal::action_values(game, side, opp);
  BestResponse<Scalar> br{values.maxCoeff(), {}};
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (br.value - values[i] <= Scalar(kTieTolerance)) br.actions.push_back(i);
  }
  return br;
}

// The payoff `side` receives when the opponent picks the pure action that
// hurts it most (a nemesis; in zero-sum games, the opponent's best response).
template <typename Scalar>
Scalar nemesis_payoff(const BimatrixGame<Scalar>& game, Side side,
                      const MixedStrategy<Scalar>& s) {
  internal::check_strategy(game, side, s);
  if (side == Side::kRow) {
    return (s.transpose() * game.payoffs(Side::kRow)).minCoeff();
  }
  return (game.payoffs(Side::kCol) * s).minCoeff();
}

// Largest gain either player can obtain by a unilateral deviation; zero
// exactly at a Nash equilibrium.
template <typename Scalar>
Scalar max_regret(const BimatrixGame<Scalar>& game,
                  const StrategyProfile<Scalar>& profile) {
  const PayoffPair<Scalar> u = expected_utility(game, profile);
  const Scalar row_gain =
      best_response(game, Side::kRow, profile.col).value - u.row;
  const Scalar col_gain =
      best_response(game, Side::kCol, profile.row).value - u.col;
  return row_gain > col_gain ? row_gain : col_gain;
}

// Game value minus the strategy's guaranteed payoff, in a zero-sum game whose
// value (to `side`) is already known.
template <typename Scalar>
Scalar exploitability(const BimatrixGame<Scalar>& game, Side side,
                      const MixedStrategy<Scalar>& s, Scalar value) {
  return value - nemesis_payoff(game, side, s);
}

// ---------------------------------------------------------------------------
// 2x2 games
//
//            L        R
//   T     (a, b)   (c, d)
//   B     (e, f)   (g, h)

template <typename Scalar = double>
struct TwoByTwoPayoffs {
  Scalar a, b, c, d, e, f, g, h;

  static TwoByTwoPayoffs zero_sum(Scalar a, Scalar c, Scalar e, Scalar g) {
    return {a, -a, c, -c, e, -e, g, -g};
  }

  bool is_zero_sum() const {
    return b == -a && d == -c && f == -e && h == -g;
  }

  BimatrixGame<Scalar> game() const {
    Matrix<Scalar> u1(2, 2), u2(2, 2);
    u1 << a, c, e, g;
    if (is_zero_sum()) return BimatrixGame<Scalar>::zero_sum(std::move(u1));
    u2 << b, d, f, h;
    return BimatrixGame<Scalar>(std::move(u1), std::move(u2));
  }
};

// Which line of the decision list produced a 2x2 equilibrium: the four pure
// cells in list order, then the fully mixed formula.
enum class TwoByTwoBranch { kTopLeft, kTopRight, kBottomLeft, kBottomRight, kMixed };

inline const char* to_string(TwoByTwoBranch branch) {
  switch (branch) {
    case TwoByTwoBranch::kTopLeft: return "(1,1)";
    case TwoByTwoBranch::kTopRight: return "(1,2)";
    case TwoByTwoBranch::kBottomLeft: return "(2,1)";
    case TwoByTwoBranch::kBottomRight: return "(2,2)";
    case TwoByTwoBranch::kMixed: return "mixed";
  }
  return "?";
}

template <typename Scalar = double>
struct TwoByTwoSolution {
  StrategyProfile<Scalar> profile;
  TwoByTwoBranch branch;
};

// Evaluates the five-line equilibrium decision list in order. The first
// matching pure-equilibrium line wins, so weakly dominant ties resolve toward
// earlier cells.
template <typename Scalar>
TwoByTwoSolution<Scalar> solve_2x2_detailed(const TwoByTwoPayoffs<Scalar>& p) {
  const auto pure = [](Eigen::Index r, Eigen::Index c, TwoByTwoBranch branch) {
    return TwoByTwoSolution<Scalar>{
        {pure_strategy<Scalar>(2, r), pure_strategy<Scalar>(2, c)}, branch};
  };
  if (p.a >= p.e && p.b >= p.d) return pure(0, 0, TwoByTwoBranch::kTopLeft);
  if (p.c >= p.g && p.d >= p.b) return pure(0, 1, TwoByTwoBranch::kTopRight);
  if (p.e >= p.a && p.f >= p.h) return pure(1, 0, TwoByTwoBranch::kBottomLeft);
  if (p.g >= p.c && p.h >= p.f) return pure(1, 1, TwoByTwoBranch::kBottomRight);

  const Scalar row_den = p.b - p.f + p.h - p.d;
  const Scalar col_den = p.a - p.c + p.g - p.e;
  if (row_den == Scalar(0) || col_den == Scalar(0)) {
    throw DegenerateInputError(
        "2x2 game has no pure equilibrium line but a zero mixing denominator");
  }
  const Scalar p_top = (p.h - p.f) / row_den;
  const Scalar q_left = (p.g - p.c) / col_den;
  MixedStrategy<Scalar> row(2), col(2);
  row << p_top, Scalar(1) - p_top;
  col << q_left, Scalar(1) - q_left;
  return {{std::move(row), std::move(col)}, TwoByTwoBranch::kMixed};
}

template <typename Scalar>
StrategyProfile<Scalar> solve_2x2(const TwoByTwoPayoffs<Scalar>& p) {
  return solve_2x2_detailed(p).profile;
}

// Row player's value of the zero-sum game with row payoffs [[a, c], [e, g]].
template <typename Scalar>
Scalar zero_sum_value_2x2(Scalar a, Scalar c, Scalar e, Scalar g) {
  const auto p = TwoByTwoPayoffs<Scalar>::zero_sum(a, c, e, g);
  return expected_utility(p.game(), solve_2x2(p)).row;
}

template <typename Scalar>
Scalar exploitability_zs(Scalar a, Scalar c, Scalar e, Scalar g, Side side,
                         const MixedStrategy<Scalar>& s) {
  const auto game = TwoByTwoPayoffs<Scalar>::zero_sum(a, c, e, g).game();
  const Scalar value = zero_sum_value_2x2(a, c, e, g);
  return exploitability(game, side, s, side == Side::kRow ? value : -value);
}

}  // namespace pgames

#endif  // PGAMES_STRATEGIC_HPP_
