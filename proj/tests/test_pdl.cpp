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

#include <random>

#include "pgames/bundled.hpp"
#include "pgames/families.hpp"
#include "pgames/pdl.hpp"
#include "pgames/pdl_text.hpp"

namespace pgames {
namespace {

Expr num(double v) { return Expr::number(v); }

ParamStrategy mix(std::vector<WeightedAction> entries) { return ParamStrategy(std::move(entries)); }

TEST_CASE("strategy construction") {
  CHECK_THROWS_AS(mix({}), DomainError);
  CHECK_THROWS_AS(mix({{"a", num(0.5)}, {"a", std::nullopt}}), DomainError);
  CHECK_THROWS_AS(mix({{"a", std::nullopt}, {"b", std::nullopt}}), DomainError);
  CHECK(ParamStrategy::pure("x").is_pure());
  CHECK_FALSE(ParamStrategy::constant({"x", "y"}, {0.3, 0.7}).is_pure());
}

TEST_CASE("strategy evaluation") {
  const auto d = ParamStrategy::constant({"x", "y"}, {0.3, 0.7}).evaluate({});
  CHECK(d.size() == 2);
  CHECK(prob_of(d, "x") == 0.3);
  CHECK(prob_of(d, "y") == doctest::Approx(0.7));
  CHECK(prob_of(d, "z") == 0.0);

  CHECK(mix({{"a", num(0.5)}, {"b", num(0.5)}}).evaluate({}).size() == 2);
  CHECK_THROWS_AS(mix({{"a", num(0.5)}, {"b", num(0.4)}}).evaluate({}), InvalidDistributionError);
  CHECK_THROWS_AS(mix({{"a", num(1.5)}, {"b", std::nullopt}}).evaluate({}), InvalidDistributionError);
  CHECK_THROWS_AS(mix({{"a", num(0.7)}, {"b", num(0.7)}, {"c", std::nullopt}}).evaluate({}),
                  InvalidDistributionError);
  CHECK_THROWS_AS(mix({{"a", num(-0.1)}, {"b", std::nullopt}}).evaluate({}), InvalidDistributionError);
  // Rounding noise inside the band is clamped away.
  const auto c = mix({{"a", num(1 + 1e-12)}, {"b", std::nullopt}}).evaluate({});
  CHECK(prob_of(c, "a") == 1.0);
  CHECK(prob_of(c, "b") == 0.0);
}

TEST_CASE("list construction") {
  const Comparison cond{Expr::param("l1"), CompareOp::kGreaterEqual, num(0)};
  CHECK_THROWS_AS(Pdl({"l1", "l1"}, {}, ParamStrategy::pure("B")), DomainError);
  CHECK_THROWS_AS(Pdl({"l1"}, {Rule{{}, ParamStrategy::pure("A")}}, ParamStrategy::pure("B")), DomainError);
  CHECK_THROWS_AS(Pdl({"l2"}, {Rule{{cond}, ParamStrategy::pure("A")}}, ParamStrategy::pure("B")), DomainError);
  CHECK_THROWS_AS(Pdl({}, {}, mix({{"a", Expr::param("q")}, {"b", std::nullopt}})), DomainError);
}

TEST_CASE("first matching rule wins") {
  const Comparison ge{Expr::param("l1"), CompareOp::kGreaterEqual, num(0)};
  const Pdl pdl({"l1"}, {Rule{{ge}, ParamStrategy::pure("A")}}, ParamStrategy::pure("B"));
  auto e = evaluate_pdl(pdl, {{"l1", 0.0}});
  CHECK(e.rule == std::optional<std::size_t>(0));
  CHECK(rule_label(e) == "rule 1");
  CHECK(e.strategy[0].action == "A");
  e = evaluate_pdl(pdl, {{"l1", -1e-300}});
  CHECK_FALSE(e.rule);
  CHECK(rule_label(e) == "default");
  CHECK_THROWS_AS(evaluate_pdl(pdl, {}), EvaluationError);
  CHECK(pdl.depth() == 2);
  CHECK(pdl.width() == 1);
}

TEST_CASE("comparison operators") {
  const Assignment a{{"x", 1.0}};
  const auto holds = [&](CompareOp op, double rhs) {
    return Comparison{Expr::param("x"), op, num(rhs)}.holds(a);
  };
  CHECK(holds(CompareOp::kLess, 2));
  CHECK_FALSE(holds(CompareOp::kLess, 1));
  CHECK(holds(CompareOp::kLessEqual, 1));
  CHECK(holds(CompareOp::kGreater, 0));
  CHECK(holds(CompareOp::kGreaterEqual, 1));
  CHECK(holds(CompareOp::kEqual, 1));
  CHECK(holds(CompareOp::kNotEqual, 0));
  CHECK_FALSE(holds(CompareOp::kNotEqual, 1));
}

TEST_CASE("bundled sheets") {
  const Pdl& p1 = bundled_pdl("jeopardy_p1");
  auto e = evaluate_pdl(p1, {{"p1", 0.7}, {"p2", 0.0}});
  CHECK(rule_label(e) == "rule 1");
  CHECK(prob_of(e.strategy, "wager0") == 1.0);

  e = evaluate_pdl(p1, {{"p1", 0.5}, {"p2", 0.25}});
  CHECK(rule_label(e) == "default");
  CHECK(prob_of(e.strategy, "wager1") == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(prob_of(e.strategy, "wager2") == doctest::Approx(0.6).epsilon(1e-12));

  CHECK(p1.depth() == 5);
  CHECK(p1.width() == 1);
  CHECK(bundled_pdl("jeopardy_p2").width() == 2);
  CHECK(bundled_pdl("jeopardy_p2").depth() == 6);
  CHECK(bundled_pdl("two_by_two").depth() == 5);
  CHECK(bundled_pdl("two_by_two").width() == 2);
  CHECK(bundled_pdl("weakest_link").depth() == 2);
  CHECK(bundled_pdl("weakest_link").width() == 1);
  CHECK(bundled_names().size() == 4);
  CHECK_THROWS_AS(bundled_text("nope"), DomainError);
}

TEST_CASE("later rules never change an earlier match") {
  const Pdl& base = bundled_pdl("jeopardy_p2");
  std::vector<Rule> reversed(base.rules().begin() + 1, base.rules().end());
  std::reverse(reversed.begin(), reversed.end());
  reversed.insert(reversed.begin(), base.rules().front());
  const Pdl swapped(base.params(), reversed, base.fallback());
  for (const auto& point : families::jeopardy_grid()) {
    const auto a = evaluate_pdl(base, point);
    if (a.rule == std::optional<std::size_t>(0)) {
      const auto b = evaluate_pdl(swapped, point);
      CHECK(b.rule == a.rule);
    }
  }
}

TEST_CASE("nearest-sample constructor examples") {
  Eigen::MatrixXd one(1, 1);
  one << 0.3;
  auto pdl = build_nn_pdl(one, {ParamStrategy::pure("s1")});
  CHECK(pdl.rules().empty());
  CHECK(pdl.depth() == 1);
  CHECK(evaluate_pdl(pdl, {{"lambda", 5.0}}).strategy[0].action == "s1");

  Eigen::MatrixXd two(1, 2);
  two << 0.2, 0.8;
  pdl = build_nn_pdl(two, {ParamStrategy::pure("s1"), ParamStrategy::pure("s2")});
  CHECK(pdl.depth() == 2);
  CHECK(evaluate_pdl(pdl, {{"lambda", 0.5}}).strategy[0].action == "s1");
  CHECK(evaluate_pdl(pdl, {{"lambda", 0.7}}).strategy[0].action == "s2");

  CHECK_THROWS_AS(build_nn_pdl(Eigen::MatrixXd(1, 0), {}), DomainError);
  CHECK_THROWS_AS(build_nn_pdl(two, {ParamStrategy::pure("s1")}), DimensionError);
}

TEST_CASE("nearest-sample constructor matches argmin lookup") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> size(1, 12), dims(1, 4);
  for (int set = 0; set < 20; ++set) {
    const int t = size(rng), d = dims(rng);
    Eigen::MatrixXd samples = Eigen::MatrixXd::NullaryExpr(d, t, [&] { return u(rng); });
    if (t > 2) samples.col(2) = samples.col(0);  // exact duplicate: lowest index must win
    std::vector<ParamStrategy> strategies;
    for (int i = 0; i < t; ++i) strategies.push_back(ParamStrategy::pure("s" + std::to_string(i)));
    const Pdl pdl = build_nn_pdl(samples, strategies);
    CHECK(pdl.depth() == static_cast<std::size_t>(t));
    CHECK(pdl.width() == static_cast<std::size_t>(t > 1 ? t - 1 : 0));
    const auto names = default_param_names(d);
    for (int q = 0; q < 50; ++q) {
      Eigen::VectorXd query = Eigen::VectorXd::NullaryExpr(d, [&] { return u(rng); });
      if (q == 0) query = samples.col(t - 1);
      Eigen::Index best = 0;
      (samples.colwise() - query).colwise().squaredNorm().minCoeff(&best);
      const auto e = evaluate_pdl(pdl, make_assignment(names, query));
      CHECK(e.strategy[0].action == "s" + std::to_string(best));
    }
  }
}

TEST_CASE("implementability check") {
  for (const auto& family : families::names()) {
    const auto r = check_implementability(bundled_pdl(family), families::adapter(family),
                                          families::default_grid(family));
    CHECK(r.epsilon <= kCertificateTolerance);
    CHECK(r.depth == bundled_pdl(family).depth());
  }
  const Pdl wrong({"p1", "p2"}, {}, ParamStrategy::pure("wager5"));
  const auto r = check_implementability(wrong, families::adapter("jeopardy_p1"), families::jeopardy_grid());
  CHECK(r.epsilon > 0.1);
  CHECK(r.worst.count("p1"));

  const Pdl broken({"p1", "p2"}, {}, ParamStrategy::pure("wager9"));
  CHECK_THROWS_AS(check_implementability(broken, families::adapter("jeopardy_p1"), families::jeopardy_grid()),
                  ImplementabilityError);
  CHECK_THROWS_AS(check_implementability(wrong, families::adapter("jeopardy_p1"), {}), DomainError);
}

TEST_CASE("describe") {
  CHECK(describe({{"p1", 0.5}, {"p2", 0.25}}) == "p1=0.5, p2=0.25");
}

}  // namespace
}  // namespace pgames
