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


#include <doctest.h>

#include "pgames/jeopardy.hpp"

namespace pgames::jeopardy {
namespace {

// Player 1's zero-sum payoff from the rules: enumerate the four right/wrong
// outcomes, compare final banks, win = +0.5, tie = 0, loss = -0.5.
double rules_payoff(double p1, double p2, int w1, int w2) {
  double total = 0.0;
  for (int r1 = 0; r1 < 2; ++r1) {
    for (int r2 = 0; r2 < 2; ++r2) {
      const double prob = (r1 ? p1 : 1 - p1) * (r2 ? p2 : 1 - p2);
      const int b1 = kBank1 + (r1 ? w1 : -w1);
      const int b2 = kBank2 + (r2 ? w2 : -w2);
      total += prob * (b1 > b2 ? 0.5 : b1 < b2 ? -0.5 : 0.0);
    }
  }
  return total;
}

std::vector<Params> grid() {
  std::vector<Params> out;
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) out.push_back({i / 20.0, j / 20.0});
  }
  return out;
}

TEST_CASE("matrix entries follow the game rules") {
  for (const auto& p : grid()) {
    const auto g = payoff_matrix(p);
    REQUIRE(g.rows() == 6);
    REQUIRE(g.cols() == 4);
    CHECK(g.is_zero_sum());
    for (int w1 = 0; w1 <= kBank1; ++w1) {
      for (int w2 = 0; w2 <= kBank2; ++w2) {
        const double u = g.payoffs(Side::kRow)(w1, w2);
        CHECK(u == doctest::Approx(rules_payoff(p.p1, p.p2, w1, w2)).epsilon(1e-12));
        CHECK(g.payoffs(Side::kCol)(w1, w2) == -u);
        CHECK(u >= -0.5);
        CHECK(u <= 0.5);
      }
    }
  }
}

TEST_CASE("matrix spot values") {
  CHECK(payoff_matrix({0, 0}).payoffs(Side::kRow)(0, 0) == 0.5);
  CHECK(payoff_matrix({0.3, 0.9}).payoffs(Side::kRow)(5, 0) == doctest::Approx(-0.2));
  CHECK(payoff_matrix({1, 1}).payoffs(Side::kRow)(2, 1) == 0.5);
  CHECK(payoff_matrix({0.4, 0.3}).payoffs(Side::kRow)(1, 1) == doctest::Approx(0.5 * 0.12 - 0.15 + 0.5));
  CHECK(payoff_matrix({0.4, 0.3}).payoffs(Side::kRow)(2, 0) == doctest::Approx(0.2));
  // Loses only when wrong while player 2 is right.
  CHECK(payoff_matrix({0.4, 0.3}).payoffs(Side::kRow)(1, 2) == doctest::Approx(0.5 - 0.6 * 0.3));
  CHECK_THROWS_AS(payoff_matrix({1.5, 0}), ParameterError);
}

TEST_CASE("advice examples") {
  auto a = advise(1, {0.7, 0.0});
  CHECK(a.strategy.size() == 1);
  CHECK(prob_of(a.strategy, "wager0") == 1.0);
  CHECK(a.branch == "p2 == 0");
  CHECK(a.rule == std::optional<std::size_t>(0));

  a = advise(2, {0.6, 0.7});
  CHECK(prob_of(a.strategy, "wager2") == 1.0);
  CHECK(a.branch == "p1 >= 1 / 2 and p2 >= 1 / 2");

  a = advise(2, {0.5, 0.25});
  CHECK(prob_of(a.strategy, "wager0") == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(prob_of(a.strategy, "wager3") == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(a.branch == "mixed");
  CHECK_FALSE(a.rule);

  a = advise(1, {0.5, 0.25});
  CHECK(prob_of(a.strategy, "wager1") == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(prob_of(a.strategy, "wager2") == doctest::Approx(0.6).epsilon(1e-12));

  CHECK_THROWS_AS(advise(3, {0.5, 0.5}), ParameterError);
  try {
    advise(1, {2.0, 0.5});
    FAIL("accepted p1 = 2");
  } catch (const ParameterError& e) {
    CHECK(e.field() == "p1");
  }
}

TEST_CASE("branch order at the p2 = 1/2 boundary") {
  const auto a = advise(1, {0.3, 0.5});
  CHECK(a.branch == "p2 >= 1 / 2");
  CHECK(prob_of(a.strategy, "wager2") == 1.0);
  CHECK(advise(2, {0.3, 0.5}).branch == "p2 >= 1 / 2");
}

TEST_CASE("equilibrium cases") {
  CHECK(equilibrium_case({0.7, 0.0}) == "(0,0)");
  CHECK(equilibrium_case({0.0, 0.6}) == "(0,3)");
  CHECK(equilibrium_case({1.0, 0.6}) == "(2,0)");
  CHECK(equilibrium_case({0.6, 0.7}) == "(2,2)");
  CHECK(equilibrium_case({0.4, 0.6}) == "(2,3)");
  CHECK(equilibrium_case({0.5, 0.25}) == "mixed");
}

TEST_CASE("advised profile is an equilibrium on the grid") {
  for (const auto& p : grid()) {
    CAPTURE(p.p1);
    CAPTURE(p.p2);
    const auto prof = advised_profile(p);
    CHECK(is_mixed_strategy(prof.row));
    CHECK(is_mixed_strategy(prof.col));
    CHECK(verify_equilibrium(p) <= kCertificateTolerance);
  }
  CHECK(verify_equilibrium({1, 1}) <= kCertificateTolerance);
}

TEST_CASE("mixed branch value and no-deviation inequalities") {
  const Params spot{0.5, 0.25};
  CHECK(mixed_branch_row_value(spot) == doctest::Approx(0.35).epsilon(1e-12));
  CHECK(expected_utility(payoff_matrix(spot), advised_profile(spot)).row ==
        doctest::Approx(0.35).epsilon(1e-12));
  CHECK_THROWS_AS(mixed_branch_row_value({1, 0}), DegenerateInputError);

  for (const auto& p : grid()) {
    if (equilibrium_case(p) != "mixed") continue;
    const auto g = payoff_matrix(p);
    const auto prof = advised_profile(p);
    const double v = mixed_branch_row_value(p);
    CHECK(expected_utility(g, prof).row == doctest::Approx(v).epsilon(1e-12));
    const Vector<double> rows = g.payoffs(Side::kRow) * prof.col;
    for (int w1 : {0, 3, 4, 5}) CHECK(rows[w1] <= v + 1e-9);
    const Vector<double> cols = prof.row.transpose() * g.payoffs(Side::kRow);
    for (int w2 : {1, 2}) CHECK(cols[w2] >= v - 1e-9);
  }
}

TEST_CASE("exact arithmetic instantiation") {
  const auto g = payoff_matrix<long double>(0.5L, 0.25L);
  CHECK(static_cast<double>(g.payoffs(Side::kRow)(1, 3)) == doctest::Approx(0.5 + 0.0625 - 0.25));
}

}  // namespace
}  // namespace pgames::jeopardy
