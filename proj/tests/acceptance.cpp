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


// Acceptance checks. Each criterion prints its report lines indented, then one
// "PASS name: detail" or "FAIL name: detail" line.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pgames/bundled.hpp"
#include "pgames/families.hpp"
#include "pgames/jeopardy.hpp"
#include "pgames/kuhn.hpp"
#include "pgames/pdl.hpp"
#include "pgames/pdl_text.hpp"
#include "pgames/sampling.hpp"
#include "pgames/strategic.hpp"
#include "pgames/weakest_link.hpp"
#include "kuhn_pins.hpp"
#include "pdl_fuzz.hpp"

namespace pgames {
namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    notes.push_back((ok ? "ok   " : "FAIL ") + what);
  }
  void report(const std::string& what) { notes.push_back("     " + what); }
};

std::string num(double v, int digits = 6) {
  std::ostringstream s;
  s << std::setprecision(digits) << v;
  return s.str();
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_time(Outcome& out, const Timer& timer, double budget) {
  const double s = timer.seconds();
  out.require(s < budget, "runtime " + num(s, 3) + " s < " + num(budget) + " s");
}

Vector<double> random_mixed(std::mt19937_64& rng, Eigen::Index n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vector<double> v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = u(rng) + 1e-3;
  return v / v.sum();
}

Outcome solve2x2() {
  Outcome out;
  const Timer timer;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const TwoByTwoPayoffs<double> p{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
    worst = std::max(worst, max_regret(p.game(), solve_2x2(p)));
  }
  out.require(worst <= 1e-9, "10000 general-sum games, max regret " + num(worst) + " <= 1e-9");
  require_time(out, timer, 5.0);
  return out;
}

Outcome continuity() {
  Outcome out;
  const Timer timer;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0), eps_dist(0.0, 0.2);
  std::uniform_int_distribution<int> dim(1, 5);
  // Slack is bound minus observed; must stay non-negative.
  double payoff_slack = 1e9, value_slack = 1e9, transfer_slack = 1e9;
  for (int trial = 0; trial < 1000; ++trial) {
    const double eps = 0.2 - eps_dist(rng);
    const auto perturb = [&](const Matrix<double>& m) {
      Matrix<double> p = m;
      for (Eigen::Index i = 0; i < m.size(); ++i) p.data()[i] += eps * u(rng);
      return p;
    };

    const Eigen::Index m = dim(rng), k = dim(rng);
    const Matrix<double> a1 = Matrix<double>::NullaryExpr(m, k, [&] { return u(rng); });
    const Matrix<double> a2 = Matrix<double>::NullaryExpr(m, k, [&] { return u(rng); });
    const BimatrixGame<double> g1(a1, a2), g2(perturb(a1), perturb(a2));
    const StrategyProfile<double> prof{random_mixed(rng, m), random_mixed(rng, k)};
    const auto u1 = expected_utility(g1, prof), u2 = expected_utility(g2, prof);
    payoff_slack = std::min(payoff_slack, eps + 1e-12 - std::max(std::abs(u1.row - u2.row), std::abs(u1.col - u2.col)));

    Matrix<double> z1(2, 2);
    z1 << u(rng), u(rng), u(rng), u(rng);
    const Matrix<double> z2 = perturb(z1);
    const double v1 = zero_sum_value_2x2(z1(0, 0), z1(0, 1), z1(1, 0), z1(1, 1));
    const double v2 = zero_sum_value_2x2(z2(0, 0), z2(0, 1), z2(1, 0), z2(1, 1));
    value_slack = std::min(value_slack, eps + 1e-12 - std::abs(v1 - v2));

    const auto zs2 = BimatrixGame<double>::zero_sum(z2);
    const auto eq = solve_2x2(TwoByTwoPayoffs<double>::zero_sum(z1(0, 0), z1(0, 1), z1(1, 0), z1(1, 1)));
    const double transferred =
        std::max(exploitability(zs2, Side::kRow, eq.row, v2), exploitability(zs2, Side::kCol, eq.col, -v2));
    transfer_slack = std::min(transfer_slack, 2 * eps + 1e-9 - transferred);
  }
  out.require(payoff_slack >= 0, "profile payoffs move by <= eps + 1e-12 (min slack " + num(payoff_slack) + ")");
  out.require(value_slack >= 0, "zero-sum values move by <= eps + 1e-12 (min slack " + num(value_slack) + ")");
  out.require(transfer_slack >= 0,
              "transferred equilibria exploitable by <= 2 eps + 1e-9 (min slack " + num(transfer_slack) + ")");
  require_time(out, timer, 10.0);
  return out;
}

Outcome nn_experiment() {
  using namespace sampling;
  Outcome out;

  {
    const Timer timer;
    ExperimentConfig desk;
    desk.n_train = 10000;
    desk.k_values = {1, 2, 3, 5, 10, 20, 100, 1000, 10000};
    desk.n_test = 1000;
    run_experiment(desk);
    out.require(timer.seconds() < 60.0, "desk profile 10000/1000 took " + num(timer.seconds(), 3) + " s < 60 s");
  }

  const Timer timer;
  const ExperimentConfig full;  // 100000 train, 10000 test, seed 42
  const auto rows = run_experiment(full);
  out.report("k, avg exploitability, std err (n_train=100000, n_test=10000, seed 42)");
  for (const auto& row : rows) {
    out.report("k=" + std::to_string(row.k) + ": " + num(row.avg_exploitability) + " +- " + num(row.std_err));
  }
  const double at_max = rows.back().avg_exploitability;
  out.require(at_max >= 0.003 && at_max <= 0.013, "k=100000 exploitability " + num(at_max) + " in [0.003, 0.013]");
  out.report("full run took " + num(timer.seconds(), 3) + " s");

  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = 1; s <= 20; ++s) seeds.push_back(s);
  const auto conv = convergence_study(ZeroSumFamily::uniform(), {10, 100000}, seeds, 1000);
  out.require(conv[1].mean < conv[0].mean, "20 seeds (n_test=1000 each): mean at k=100000 " + num(conv[1].mean) +
                                               " < mean at k=10 " + num(conv[0].mean));
  return out;
}

Outcome nn_constructor() {
  Outcome out;
  const Timer timer;
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> size(1, 50), dims(1, 4);
  std::size_t mismatches = 0, bad_depth = 0, queries = 0;
  for (int set = 0; set < 100; ++set) {
    const int t = size(rng), d = dims(rng);
    Eigen::MatrixXd samples = Eigen::MatrixXd::NullaryExpr(d, t, [&] { return u(rng); });
    if (t > 3) samples.col(t / 2) = samples.col(1);
    std::vector<ParamStrategy> strategies;
    for (int i = 0; i < t; ++i) strategies.push_back(ParamStrategy::pure("s" + std::to_string(i)));
    const Pdl pdl = build_nn_pdl(samples, strategies);
    bad_depth += pdl.depth() != static_cast<std::size_t>(t);
    const auto names = default_param_names(d);
    for (int q = 0; q < 1000; ++q) {
      Eigen::VectorXd query = Eigen::VectorXd::NullaryExpr(d, [&] { return u(rng); });
      if (q < t) query = samples.col(q);
      const Eigen::Index best = sampling::nearest_index(samples, query);
      const auto e = evaluate_pdl(pdl, make_assignment(names, query));
      mismatches += e.strategy[0].action != "s" + std::to_string(best);
      ++queries;
    }
  }
  out.require(mismatches == 0, std::to_string(queries) + " queries over 100 sample sets, " +
                                   std::to_string(mismatches) + " differ from nearest-sample lookup");
  out.require(bad_depth == 0, "depth equals sample count for every set");
  out.report("took " + num(timer.seconds(), 3) + " s");
  return out;
}

Outcome jeopardy_check() {
  Outcome out;
  double worst = 0.0;
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const jeopardy::Params p{i * 0.05, j * 0.05};
      worst = std::max(worst, max_regret(jeopardy::payoff_matrix(p), jeopardy::advised_profile(p)));
    }
  }
  out.require(worst <= 1e-9, "21x21 grid, max regret " + num(worst) + " <= 1e-9");
  const jeopardy::Params spot{0.5, 0.25};
  const double value = expected_utility(jeopardy::payoff_matrix(spot), jeopardy::advised_profile(spot)).row;
  const double formula = jeopardy::mixed_branch_row_value(spot);
  out.require(std::abs(value - 0.35) <= 1e-12, "row value at (0.5, 0.25) is " + num(value, 17));
  out.require(std::abs(formula - 0.35) <= 1e-12, "closed-form mixed value at (0.5, 0.25) is " + num(formula, 17));
  return out;
}

Outcome kuhn_check() {
  using kuhn::Rational;
  Outcome out;
  const Timer timer;
  bool alpha_ok = true;
  for (int k = 0; k <= 4; ++k) {
    const Rational alpha = Rational(k) / 4;
    const auto exact = kuhn::alpha_equilibrium<Rational>(alpha);
    const auto approx = kuhn::alpha_equilibrium<double>(k / 4.0);
    const bool ok = kuhn::expected_value(exact) == Rational(-1) / 18 && kuhn::nashconv(exact) == 0 &&
                    kuhn::nashconv(approx) <= 1e-12;
    out.report("alpha=" + num(k / 4.0) + ": ev " + kuhn::expected_value(exact).str() + ", nashconv " +
               kuhn::nashconv(exact).str());
    alpha_ok = alpha_ok && ok;
  }
  out.require(alpha_ok, "three-card family: ev -1/18 and nashconv 0 exactly for alpha in {0, 1/4, 1/2, 3/4, 1}");

  int pin_failures = 0, ratio_failures = 0;
  std::string chain_failures;
  for (const auto& pin : kuhn::testing::kPins) {
    const auto p = kuhn::pdl_strategy<Rational>(pin.n);
    pin_failures += kuhn::nashconv(p) != Rational(pin.nashconv) || kuhn::expected_value(p) != Rational(pin.ev);
    const auto m = kuhn::opening_mass(p.a);
    ratio_failures += m.bluff / (m.bluff + m.value) != Rational(1) / 4;
    const auto chains = kuhn::threshold_chains(pin.n);
    if (!chains.after_bet || !chains.after_check) {
      chain_failures += (chain_failures.empty() ? "" : ", ") + std::string("n=") + std::to_string(pin.n);
      if (!chains.after_bet) chain_failures += " after bet";
      if (!chains.after_check) chain_failures += " after check";
    }
  }
  out.require(pin_failures == 0, "pinned nashconv and ev for n=3..50 (" + std::to_string(pin_failures) + " differ)");
  out.require(ratio_failures == 0, "bluff share of opening bets is 1/4 for n=3..50");
  out.require(chain_failures.empty(),
              "threshold ordering chains for n=3..50" +
                  (chain_failures.empty() ? std::string() : " (violated at " + chain_failures + ")"));
  require_time(out, timer, 30.0);
  return out;
}

Outcome weakest_link_check() {
  using namespace weakest_link;
  Outcome out;
  const Timer timer;
  std::size_t points = 0, sign_bad = 0, scale_bad = 0, weak_bad = 0, gap_bad = 0;
  double worst_gap = 0.0;
  for (int i1 = 0; i1 <= 20; ++i1) {
    for (int i2 = 0; i2 < i1; ++i2) {
      for (int j1 = 0; j1 <= 20; ++j1) {
        for (int j2 = 0; j2 <= 20; ++j2) {
          const Params p{1.0, i1 * 0.05, i2 * 0.05, j1 * 0.05, j2 * 0.05};
          ++points;
          bool defined = true;
          try {
            case_probs(p);
          } catch (const DegenerateInputError&) {
            defined = false;
          }
          if (defined) {
            const double diff = ev_vote_paper(Vote::kPlayer1, p) - ev_vote_paper(Vote::kPlayer2, p);
            if (std::abs(diff) > 1e-12) sign_bad += (decide_vote_paper(p) == Vote::kPlayer1) != (diff > 0);
          }
          Params scaled = p;
          scaled.w *= 7.3;
          scale_bad += decide_vote_paper(scaled) != decide_vote_paper(p);
          if (p.p2 <= p.p1 / 2 + 1e-12 && p.y1 < 1 && p.y2 > 0) weak_bad += decide_vote_paper(p) != Vote::kPlayer2;
          const double gap = (1 - p.y1) * (1 - p.y2) * (p.p1 - p.p2) * p.w;
          const double err = std::abs(full_difference(p) - paper_difference(p) - gap);
          worst_gap = std::max(worst_gap, err);
          gap_bad += err > 1e-12;
        }
      }
    }
  }
  const std::string n = std::to_string(points) + " grid points";
  out.require(sign_bad == 0, n + ", decision sign matches the ev difference (" + std::to_string(sign_bad) + " bad)");
  out.require(scale_bad == 0, "decision unchanged when the bank is scaled by 7.3");
  out.require(weak_bad == 0, "p2 <= p1/2 with 0 < y2, y1 < 1 votes off player 2");
  out.require(gap_bad == 0, "full minus rule difference is (1-y1)(1-y2)(p1-p2)W (max error " + num(worst_gap) + ")");
  const auto report = agreement_report(0.05);
  out.report("agreement at step 0.05: " + std::to_string(report.agreements) + "/" + std::to_string(report.cells) +
             " (" + num(report.fraction) + ")");
  require_time(out, timer, 5.0);
  return out;
}

Outcome pdl_format() {
  Outcome out;
  std::size_t bundled_bad = 0, bundled_points = 0;
  for (const auto& name : bundled_names()) {
    const Pdl& original = bundled_pdl(name);
    const Pdl reparsed = parse_pdl(render_pdl(original));
    for (const auto& point : families::default_grid(name)) {
      ++bundled_points;
      bundled_bad += !testing::semantic_difference(original, reparsed, point).empty();
    }
  }
  out.require(bundled_bad == 0, "bundled sheets round trip on " + std::to_string(bundled_points) + " points");

  testing::Fuzzer fuzz(5);
  std::size_t fuzz_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const Pdl original = fuzz.pdl();
    const std::string text = render_pdl(original);
    try {
      const Pdl reparsed = parse_pdl(text);
      fuzz_bad += render_pdl(reparsed) != text;
      for (int k = 0; k < 10; ++k) fuzz_bad += !testing::semantic_difference(original, reparsed, fuzz.point()).empty();
    } catch (const DomainError&) {
      ++fuzz_bad;
    }
  }
  out.require(fuzz_bad == 0, "1000 random lists x 10 points round trip");

  std::size_t misplaced = 0, cases = 0;
  for (const auto& m : testing::kMalformed) {
    ++cases;
    try {
      parse_pdl(m.text);
      ++misplaced;
    } catch (const PdlSyntaxError& e) {
      misplaced += e.line() != m.line || e.column() != m.column;
    }
  }
  std::mt19937_64 rng(23);
  const std::string alphabet = "params:if else and rest -> {}(),+-*/<>=!#\n 0123456789.eE abcp1p2_";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1), len(0, 60);
  std::size_t unpositioned = 0;
  for (int i = 0; i < 5000; ++i) {
    std::string text;
    for (std::size_t n = len(rng); n > 0; --n) text += alphabet[pick(rng)];
    try {
      parse_pdl(text);
    } catch (const PdlSyntaxError& e) {
      unpositioned += e.line() < 1 || e.column() < 1;
    } catch (const DomainError&) {
    }
  }
  out.require(misplaced == 0, std::to_string(cases) + " malformed sheets report the expected line and column");
  out.require(unpositioned == 0, "5000 random inputs: every syntax error carries a position, no crash");
  return out;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"solve2x2", solve2x2},           {"continuity", continuity},
      {"nn_experiment", nn_experiment}, {"nn_constructor", nn_constructor},
      {"jeopardy", jeopardy_check},     {"kuhn", kuhn_check},
      {"weakest_link", weakest_link_check}, {"pdl_format", pdl_format},
  };
  return all;
}

}  // namespace
}  // namespace pgames

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<std::string> only;
  app.add_option("--only", only, "Run only these criteria");
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  std::size_t ran = 0;
  for (const auto& c : pgames::criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.name) == only.end()) continue;
    ++ran;
    pgames::Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.require(false, std::string("threw: ") + e.what());
    }
    for (const auto& note : out.notes) std::cout << "  " << note << '\n';
    std::string summary;
    for (const auto& note : out.notes) {
      if (note.rfind("FAIL", 0) == 0) summary += (summary.empty() ? "" : "; ") + note.substr(5);
    }
    if (summary.empty()) summary = std::to_string(out.notes.size()) + " checks";
    std::cout << (out.pass ? "PASS " : "FAIL ") << c.name << ": " << summary << std::endl;
    all_pass = all_pass && out.pass;
  }
  if (ran == 0) {
    std::cerr << "no criterion matched\n";
    return 2;
  }
  return all_pass ? 0 : 1;
}
