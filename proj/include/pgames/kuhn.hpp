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


// Generalized Kuhn poker with an n-card deck.
//
// Both players ante 1 and receive distinct cards 1..n. A bets 1 or checks.
// After a bet B calls or folds; after a check B bets or checks, and a bet
// leaves A to call or fold. Showdowns go to the higher card.
//
// Strategies are behavioral: one probability per card for each of the four
// decisions, stored 0-based (entry x - 1 holds card x). All routines are
// templated on the scalar; `Rational` gives exact results.

#ifndef PGAMES_KUHN_HPP_
#define PGAMES_KUHN_HPP_

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "pgames/common.hpp"
#include "pgames/pdl.hpp"

namespace pgames::kuhn {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

// Enumeration is O(n^2) per evaluation.
inline constexpr int kDefaultMaxCards = 10000;

// Throws ParameterError("n") unless 3 <= n <= max_cards.
void validate_cards(int n, int max_cards = kDefaultMaxCards);

template <typename Scalar = double>
struct StrategyA {
  Vector<Scalar> bet_first;             // bet instead of check
  Vector<Scalar> call_after_check_bet;  // call instead of fold
};

template <typename Scalar = double>
struct StrategyB {
  Vector<Scalar> call_vs_bet;   // call instead of fold
  Vector<Scalar> bet_vs_check;  // bet instead of check
};

template <typename Scalar = double>
struct Profile {
  StrategyA<Scalar> a;
  StrategyB<Scalar> b;

  int cards() const { return static_cast<int>(a.bet_first.size()); }
};

namespace internal {

inline long floor_div(long num, long den) { return num / den; }
inline long ceil_div(long num, long den) { return (num + den - 1) / den; }

// num/den - floor(num/den)
template <typename Scalar>
Scalar frac(long num, long den) {
  return Scalar(num % den) / Scalar(den);
}

// ceil(num/den) - num/den
template <typename Scalar>
Scalar co_frac(long num, long den) {
  return Scalar((den - num % den) % den) / Scalar(den);
}

template <typename Scalar>
void check_probability(const Scalar& p, const char* table, int card) {
  if (p < Scalar(0) || p > Scalar(1)) {
    throw std::logic_error(std::string("threshold formula gave a probability outside [0, 1] in ") +
                           table + " at card " + std::to_string(card));
  }
}

// Bets below the low threshold and above the high one, mixing at the two
// boundary cards. Used for A's opening and B's reply to a check.
template <typename Scalar>
Vector<Scalar> two_sided(int n, long lo_num, long lo_den, long hi_num, long hi_den,
                         const char* table) {
  Vector<Scalar> out(n);
  for (int x = 1; x <= n; ++x) {
    Scalar p(0);
    if (x <= floor_div(lo_num, lo_den)) {
      p = Scalar(1);
    } else if (x == ceil_div(lo_num, lo_den)) {
      p = frac<Scalar>(lo_num, lo_den);
    } else if (x >= ceil_div(hi_num, hi_den)) {
      p = Scalar(1);
    } else if (x == floor_div(hi_num, hi_den)) {
      p = co_frac<Scalar>(hi_num, hi_den);
    }
    check_probability(p, table, x);
    out[x - 1] = p;
  }
  return out;
}

// Continues at or above ceil(num/den), mixing at floor(num/den).
template <typename Scalar>
Vector<Scalar> upper(int n, long num, long den, const char* table) {
  Vector<Scalar> out(n);
  for (int x = 1; x <= n; ++x) {
    Scalar p(0);
    if (x >= ceil_div(num, den)) {
      p = Scalar(1);
    } else if (x == floor_div(num, den)) {
      p = co_frac<Scalar>(num, den);
    }
    check_probability(p, table, x);
    out[x - 1] = p;
  }
  return out;
}

}  // namespace internal

// The closed-form threshold strategy for n cards.
template <typename Scalar = double>
Profile<Scalar> pdl_strategy(int n, int max_cards = kDefaultMaxCards) {
  validate_cards(n, max_cards);
  const long m = n;
  Profile<Scalar> p;
  p.a.bet_first = internal::two_sided<Scalar>(n, m - 1, 9, 2 * m + 4, 3, "bet_first");
  p.a.call_after_check_bet = internal::upper<Scalar>(n, m + 5, 3, "call_after_check_bet");
  p.b.call_vs_bet = internal::upper<Scalar>(n, m - 1, 3, "call_vs_bet");
  p.b.bet_vs_check = internal::two_sided<Scalar>(n, m - 1, 6, m + 3, 2, "bet_vs_check");
  return p;
}

// The three-card equilibrium family indexed by alpha in [0, 1].
template <typename Scalar = double>
Profile<Scalar> alpha_equilibrium(const Scalar& alpha) {
  if (alpha < Scalar(0) || alpha > Scalar(1)) {
    throw ParameterError("alpha", "alpha must lie in [0, 1]");
  }
  const Scalar third = Scalar(1) / Scalar(3);
  Profile<Scalar> p;
  p.a.bet_first.resize(3);
  p.a.bet_first << alpha * third, Scalar(0), alpha;
  p.a.call_after_check_bet.resize(3);
  p.a.call_after_check_bet << Scalar(0), alpha * third + third, Scalar(1);
  p.b.call_vs_bet.resize(3);
  p.b.call_vs_bet << Scalar(0), third, Scalar(1);
  p.b.bet_vs_check.resize(3);
  p.b.bet_vs_check << third, Scalar(0), Scalar(1);
  return p;
}

template <typename Scalar>
void validate_profile(const Profile<Scalar>& p) {
  const Eigen::Index n = p.a.bet_first.size();
  if (n < 2 || p.a.call_after_check_bet.size() != n || p.b.call_vs_bet.size() != n ||
      p.b.bet_vs_check.size() != n) {
    throw DimensionError("all four strategy tables must have one entry per card");
  }
  const auto check = [](const Vector<Scalar>& v, const char* name) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (v[i] < Scalar(0) || v[i] > Scalar(1)) {
        throw ParameterError(name, std::string(name) + " entries must be probabilities");
      }
    }
  };
  check(p.a.bet_first, "bet_first");
  check(p.a.call_after_check_bet, "call_after_check_bet");
  check(p.b.call_vs_bet, "call_vs_bet");
  check(p.b.bet_vs_check, "bet_vs_check");
}

// A's expected payoff in antes, averaged over the n(n-1) ordered deals.
template <typename Scalar>
Scalar expected_value(const Profile<Scalar>& p) {
  validate_profile(p);
  const int n = p.cards();
  Scalar total(0);
  for (int x = 0; x < n; ++x) {
    const Scalar& bet = p.a.bet_first[x];
    const Scalar& call_late = p.a.call_after_check_bet[x];
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const Scalar win(x > y ? 1 : -1);
      const Scalar& call = p.b.call_vs_bet[y];
      const Scalar& raise = p.b.bet_vs_check[y];
      const Scalar after_bet = call * Scalar(2) * win + (Scalar(1) - call);
      const Scalar after_check_bet = call_late * Scalar(2) * win - (Scalar(1) - call_late);
      const Scalar after_check = raise * after_check_bet + (Scalar(1) - raise) * win;
      total += bet * after_bet + (Scalar(1) - bet) * after_check;
    }
  }
  return total / Scalar(static_cast<long>(n) * (n - 1));
}

template <typename Scalar = double>
struct BestResponseA {
  StrategyA<Scalar> strategy;
  Scalar value;  // A's payoff
};

template <typename Scalar = double>
struct BestResponseB {
  StrategyB<Scalar> strategy;
  Scalar value;  // B's payoff, i.e. minus A's
};

// Exact best response of A against B's tables, card by card. Ties go to the
// passive action (check, fold).
template <typename Scalar>
BestResponseA<Scalar> best_response_a(const StrategyB<Scalar>& b) {
  const int n = static_cast<int>(b.call_vs_bet.size());
  BestResponseA<Scalar> br{{Vector<Scalar>::Zero(n), Vector<Scalar>::Zero(n)}, Scalar(0)};
  for (int x = 0; x < n; ++x) {
    Scalar bet(0), check_pass(0), late_call(0), late_fold(0);
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const Scalar win(x > y ? 1 : -1);
      const Scalar& call = b.call_vs_bet[y];
      const Scalar& raise = b.bet_vs_check[y];
      bet += call * Scalar(2) * win + (Scalar(1) - call);
      check_pass += (Scalar(1) - raise) * win;
      late_call += raise * Scalar(2) * win;
      late_fold -= raise;
    }
    const bool call_late = late_call > late_fold;
    const Scalar check = check_pass + (call_late ? late_call : late_fold);
    const bool bets = bet > check;
    br.strategy.bet_first[x] = Scalar(bets ? 1 : 0);
    br.strategy.call_after_check_bet[x] = Scalar(call_late ? 1 : 0);
    br.value += bets ? bet : check;
  }
  br.value /= Scalar(static_cast<long>(n) * (n - 1));
  return br;
}

// Exact best response of B against A's tables. Ties go to fold / check.
template <typename Scalar>
BestResponseB<Scalar> best_response_b(const StrategyA<Scalar>& a) {
  const int n = static_cast<int>(a.bet_first.size());
  BestResponseB<Scalar> br{{Vector<Scalar>::Zero(n), Vector<Scalar>::Zero(n)}, Scalar(0)};
  for (int y = 0; y < n; ++y) {
    Scalar call(0), fold(0), raise(0), pass(0);
    for (int x = 0; x < n; ++x) {
      if (x == y) continue;
      const Scalar b_wins(y > x ? 1 : -1);
      const Scalar& bet = a.bet_first[x];
      const Scalar& call_late = a.call_after_check_bet[x];
      call += bet * Scalar(2) * b_wins;
      fold -= bet;
      const Scalar checked = Scalar(1) - bet;
      raise += checked * (call_late * Scalar(2) * b_wins + (Scalar(1) - call_late));
      pass += checked * b_wins;
    }
    const bool calls = call > fold;
    const bool raises = raise > pass;
    br.strategy.call_vs_bet[y] = Scalar(calls ? 1 : 0);
    br.strategy.bet_vs_check[y] = Scalar(raises ? 1 : 0);
    br.value += (calls ? call : fold) + (raises ? raise : pass);
  }
  br.value /= Scalar(static_cast<long>(n) * (n - 1));
  return br;
}

// Sum of both players' best-response values against the profile; zero
// exactly at an equilibrium.
template <typename Scalar>
Scalar nashconv(const Profile<Scalar>& p) {
  validate_profile(p);
  return best_response_a(p.b).value + best_response_b(p.a).value;
}

// A's opening bet mass (sum over cards of the bet probability) split into the
// bluffing region x <= ceil((n-1)/9) and the value region
// x >= floor((2n+4)/3).
template <typename Scalar = double>
struct OpeningMass {
  Scalar bluff;
  Scalar value;
};

template <typename Scalar>
OpeningMass<Scalar> opening_mass(const StrategyA<Scalar>& a) {
  const long n = a.bet_first.size();
  const long bluff_top = internal::ceil_div(n - 1, 9);
  const long value_bottom = internal::floor_div(2 * n + 4, 3);
  OpeningMass<Scalar> m{Scalar(0), Scalar(0)};
  for (long x = 1; x <= n; ++x) {
    if (x <= bluff_top) m.bluff += a.bet_first[x - 1];
    if (x >= value_bottom) m.value += a.bet_first[x - 1];
  }
  return m;
}

// The threshold orderings the closed form relies on:
//   ceil((n-1)/9) <= floor((n-1)/3) <= ceil((n-1)/3) <= floor((2n+4)/3)
//   ceil((n-1)/6) <= floor((n-1)/3) <= ceil((n-1)/3) <= floor((n+3)/2)
struct ThresholdChains {
  bool after_bet;
  bool after_check;
};

ThresholdChains threshold_chains(int n);

// One decision table of pdl_strategy as a cheat sheet over the player's card
// (x for A, y for B) with n written in as a constant.
enum class Decision { kBetFirst, kCallVsBet, kBetVsCheck, kCallAfterCheckBet };

inline constexpr Decision kDecisions[] = {Decision::kBetFirst, Decision::kCallVsBet,
                                          Decision::kBetVsCheck, Decision::kCallAfterCheckBet};

// "bet_first", "call_vs_bet", "bet_vs_check", "call_after_check_bet".
const char* to_string(Decision decision);

std::string sheet_text(int n, Decision decision, int max_cards = kDefaultMaxCards);
Pdl sheet(int n, Decision decision, int max_cards = kDefaultMaxCards);

// Evaluates the four sheets at every card.
Profile<double> sheet_profile(int n, int max_cards = kDefaultMaxCards);

}  // namespace pgames::kuhn

#endif  // PGAMES_KUHN_HPP_
