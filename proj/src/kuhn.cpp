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


#include "pgames/kuhn.hpp"

#include "pgames/pdl_text.hpp"

namespace pgames::kuhn {

void validate_cards(int n, int max_cards) {
  if (n < 3) throw ParameterError("n", "the deck needs at least 3 cards");
  if (n > max_cards) {
    throw ParameterError("n", "deck size " + std::to_string(n) + " exceeds the limit of " +
                                  std::to_string(max_cards));
  }
}

ThresholdChains threshold_chains(int n) {
  using internal::ceil_div;
  using internal::floor_div;
  const long m = n;
  const bool middle = floor_div(m - 1, 3) <= ceil_div(m - 1, 3);
  return {ceil_div(m - 1, 9) <= floor_div(m - 1, 3) && middle &&
              ceil_div(m - 1, 3) <= floor_div(2 * m + 4, 3),
          ceil_div(m - 1, 6) <= floor_div(m - 1, 3) && middle &&
              ceil_div(m - 1, 3) <= floor_div(m + 3, 2)};
}

const char* to_string(Decision decision) {
  switch (decision) {
    case Decision::kBetFirst: return "bet_first";
    case Decision::kCallVsBet: return "call_vs_bet";
    case Decision::kBetVsCheck: return "bet_vs_check";
    case Decision::kCallAfterCheckBet: return "call_after_check_bet";
  }
  return "?";
}

namespace {

// "(2 * 9 + 4) / 3" style text for (scale * n + offset) / den.
std::string ratio(int n, int scale, int offset, int den) {
  std::string num = std::to_string(n);
  if (scale != 1) num = std::to_string(scale) + " * " + num;
  if (offset > 0) num += " + " + std::to_string(offset);
  if (offset < 0) num += " - " + std::to_string(-offset);
  return "(" + num + ") / " + std::to_string(den);
}

std::string two_sided_sheet(const std::string& card, const std::string& lo,
                            const std::string& hi, const std::string& act,
                            const std::string& pass) {
  std::string s;
  s += "  if " + card + " <= floor(" + lo + ") -> " + act + "\n";
  s += "  if " + card + " == ceil(" + lo + ") -> {" + act + ": " + lo + " - floor(" + lo +
       "), " + pass + ": rest}\n";
  s += "  if " + card + " >= ceil(" + hi + ") -> " + act + "\n";
  s += "  if " + card + " == floor(" + hi + ") -> {" + act + ": ceil(" + hi + ") - " + hi +
       ", " + pass + ": rest}\n";
  s += "  else -> " + pass + "\n";
  return s;
}

std::string upper_sheet(const std::string& card, const std::string& t, const std::string& act,
                        const std::string& pass) {
  std::string s;
  s += "  if " + card + " >= ceil(" + t + ") -> " + act + "\n";
  s += "  if " + card + " == floor(" + t + ") -> {" + act + ": ceil(" + t + ") - " + t + ", " +
       pass + ": rest}\n";
  s += "  else -> " + pass + "\n";
  return s;
}

}  // namespace

std::string sheet_text(int n, Decision decision, int max_cards) {
  validate_cards(n, max_cards);
  const std::string deck = "# Generalized Kuhn poker, " + std::to_string(n) + " cards: ";
  switch (decision) {
    case Decision::kBetFirst:
      return deck + "A opens holding card x.\nparams: x\n" +
             two_sided_sheet("x", ratio(n, 1, -1, 9), ratio(n, 2, 4, 3), "bet", "check");
    case Decision::kCallVsBet:
      return deck + "B holds card y and faces a bet.\nparams: y\n" +
             upper_sheet("y", ratio(n, 1, -1, 3), "call", "fold");
    case Decision::kBetVsCheck:
      return deck + "B holds card y after A checks.\nparams: y\n" +
             two_sided_sheet("y", ratio(n, 1, -1, 6), ratio(n, 1, 3, 2), "bet", "check");
    case Decision::kCallAfterCheckBet:
      return deck + "A holds card x, checked, and faces a bet.\nparams: x\n" +
             upper_sheet("x", ratio(n, 1, 5, 3), "call", "fold");
  }
  throw std::logic_error("unknown Kuhn decision");
}

Pdl sheet(int n, Decision decision, int max_cards) {
  return parse_pdl(sheet_text(n, decision, max_cards));
}

Profile<double> sheet_profile(int n, int max_cards) {
  Profile<double> p;
  for (Decision decision : kDecisions) {
    const Pdl pdl = sheet(n, decision, max_cards);
    const std::string card = pdl.params().front();
    const std::string act = decision == Decision::kBetFirst || decision == Decision::kBetVsCheck
                                ? "bet"
                                : "call";
    Vector<double> table(n);
    for (int c = 1; c <= n; ++c) {
      table[c - 1] = prob_of(evaluate_pdl(pdl, {{card, static_cast<double>(c)}}).strategy, act);
    }
    switch (decision) {
      case Decision::kBetFirst: p.a.bet_first = std::move(table); break;
      case Decision::kCallVsBet: p.b.call_vs_bet = std::move(table); break;
      case Decision::kBetVsCheck: p.b.bet_vs_check = std::move(table); break;
      case Decision::kCallAfterCheckBet: p.a.call_after_check_bet = std::move(table); break;
    }
  }
  return p;
}

}  // namespace pgames::kuhn
