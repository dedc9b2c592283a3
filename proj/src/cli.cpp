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


#include "pgames/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pgames/bundled.hpp"
#include "pgames/families.hpp"
#include "pgames/jeopardy.hpp"
#include "pgames/kuhn.hpp"
#include "pgames/pdl_text.hpp"
#include "pgames/sampling.hpp"
#include "pgames/service.hpp"
#include "pgames/weakest_link.hpp"

namespace pgames::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Printer {
 public:
  Printer(std::ostream& out, int precision) : out_(out), precision_(precision) {}

  std::string num(double v) const {
    std::ostringstream os;
    os << std::setprecision(precision_) << v;
    return os.str();
  }

  std::string vec(const Vector<double>& v) const {
    std::string s;
    for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? " " : "") + num(v[i]);
    return s;
  }

  std::string dist(const ActionDistribution& d) const {
    std::string s = "{";
    for (std::size_t i = 0; i < d.size(); ++i) {
      s += (i ? ", " : "") + d[i].action + ": " + num(d[i].prob);
    }
    return s + "}";
  }

  void line(const std::string& key, const std::string& value) { out_ << key << ": " << value << '\n'; }
  void line(const std::string& key, double value) { line(key, num(value)); }

  std::ostream& raw() { return out_; }

 private:
  std::ostream& out_;
  int precision_;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("PGAMES_SEED");
  if (!env || !*env) return 42;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (env[used] != '\0') throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("PGAMES_SEED is not an unsigned integer: ") + env);
  }
}

// The shortest decimal that round-trips to value, as a fraction: 0.1 -> 1/10
// rather than the binary fraction stored in the double.
kuhn::Rational decimal_rational(double value) {
  const std::string text = format_number(value);
  const std::size_t e = text.find('e');
  std::string mantissa = text.substr(0, e);
  long exponent = e == std::string::npos ? 0 : std::stol(text.substr(e + 1));
  if (const std::size_t dot = mantissa.find('.'); dot != std::string::npos) {
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
    mantissa.erase(dot, 1);
  }
  // cpp_int reads a leading 0 as octal.
  const bool negative = !mantissa.empty() && mantissa[0] == '-';
  if (negative) mantissa.erase(0, 1);
  mantissa.erase(0, std::min(mantissa.find_first_not_of('0'), mantissa.size() - 1));
  if (negative) mantissa.insert(0, 1, '-');
  kuhn::Rational out{boost::multiprecision::cpp_int(mantissa)};
  const kuhn::Rational ten(10);
  for (; exponent > 0; --exponent) out *= ten;
  for (; exponent < 0; ++exponent) out /= ten;
  return out;
}

// "bundled:name" or a file path.
std::string load_sheet(const std::string& source) {
  const std::string prefix = "bundled:";
  if (source.rfind(prefix, 0) == 0) return std::string(bundled_text(source.substr(prefix.size())));
  std::ifstream in(source);
  if (!in) throw DomainError("cannot read " + source);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

struct Options {
  int precision = 6;

  double a = 0, b = 0, c = 0, d = 0, e = 0, f = 0, g = 0, h = 0;

  double p1 = 0, p2 = 0, y1 = 0, y2 = 0, w = 1;
  int player = 0;
  bool verify = false;
  double agreement_step = 0;

  int n = 3;
  int max_cards = kuhn::kDefaultMaxCards;
  bool nashconv = false;
  bool exact = false;
  std::string export_dir;
  std::optional<double> alpha;

  Eigen::Index n_train = 100000;
  Eigen::Index n_test = 10000;
  std::vector<Eigen::Index> k_values = {1, 2, 3, 5, 10, 20, 100, 1000, 10000, 100000};
  std::optional<std::uint64_t> seed;
  double low = -1, high = 1;
  std::string out_path;
  bool kmeans = false;
  int kmeans_iter = 100;
  int seeds = 0;

  std::string sheet;
  std::vector<std::string> sets;
  std::string family;

  std::string host = "127.0.0.1";
  int port = 8080;
};

int cmd_solve2x2(CLI::App& app, const Options& o, Printer& p) {
  const bool general = app.count("--b") || app.count("--d") || app.count("--f") || app.count("--h");
  const bool complete = app.count("--b") && app.count("--d") && app.count("--f") && app.count("--h");
  if (general && !complete) throw UsageError("give all of --b --d --f --h, or none for a zero-sum game");
  const TwoByTwoPayoffs<double> payoffs = general ? TwoByTwoPayoffs<double>{o.a, o.b, o.c, o.d, o.e, o.f, o.g, o.h}
                                                  : TwoByTwoPayoffs<double>::zero_sum(o.a, o.c, o.e, o.g);
  const auto sol = solve_2x2_detailed(payoffs);
  const auto game = payoffs.game();
  const auto u = expected_utility(game, sol.profile);
  p.line("branch", to_string(sol.branch));
  p.line("row", p.vec(sol.profile.row));
  p.line("col", p.vec(sol.profile.col));
  p.line("payoff_row", u.row);
  p.line("payoff_col", u.col);
  p.line("max_regret", max_regret(game, sol.profile));
  return 0;
}

void print_jeopardy_player(int player, const jeopardy::Params& params, Printer& p) {
  const auto advice = jeopardy::advise(player, params);
  p.line("player", std::to_string(player));
  p.line("strategy", p.dist(advice.strategy));
  p.line("branch", advice.branch);
  p.line("rule", rule_label({advice.strategy, advice.rule}));
}

int cmd_jeopardy(const Options& o, Printer& p) {
  const jeopardy::Params params{o.p1, o.p2};
  params.validate();
  if (o.player == 0 || o.player == 1) print_jeopardy_player(1, params, p);
  if (o.player == 0 || o.player == 2) print_jeopardy_player(2, params, p);
  const std::string eq = jeopardy::equilibrium_case(params);
  p.line("equilibrium_case", eq);
  const auto game = jeopardy::payoff_matrix(params);
  p.line("row_value", expected_utility(game, jeopardy::advised_profile(params)).row);
  if (o.verify) p.line("max_regret", jeopardy::verify_equilibrium(params));
  return 0;
}

std::string rational_vec(const Vector<kuhn::Rational>& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].str();
  return s;
}

template <typename Scalar, typename Fmt>
void print_kuhn_profile(const kuhn::Profile<Scalar>& prof, bool nashconv, Printer& p, Fmt fmt) {
  p.line("bet_first", fmt(prof.a.bet_first));
  p.line("call_vs_bet", fmt(prof.b.call_vs_bet));
  p.line("bet_vs_check", fmt(prof.b.bet_vs_check));
  p.line("call_after_check_bet", fmt(prof.a.call_after_check_bet));
  Vector<Scalar> scalars(3);
  scalars[0] = kuhn::expected_value(prof);
  if (nashconv) {
    scalars[1] = kuhn::best_response_a(prof.b).value;
    scalars[2] = kuhn::best_response_b(prof.a).value;
  }
  const auto one = [&](Eigen::Index i) {
    Vector<Scalar> v(1);
    v[0] = scalars[i];
    return fmt(v);
  };
  p.line("ev", one(0));
  if (nashconv) {
    p.line("best_response_a", one(1));
    p.line("best_response_b", one(2));
    Vector<Scalar> total(1);
    total[0] = scalars[1] + scalars[2];
    p.line("nashconv", fmt(total));
  }
}

int cmd_kuhn(const Options& o, Printer& p) {
  const auto dbl = [&](const Vector<double>& v) { return p.vec(v); };
  if (o.alpha) {
    p.line("n", "3");
    p.line("alpha", *o.alpha);
    if (o.exact) {
      const kuhn::Rational alpha = decimal_rational(*o.alpha);
      print_kuhn_profile(kuhn::alpha_equilibrium(alpha), o.nashconv, p, rational_vec);
    } else {
      print_kuhn_profile(kuhn::alpha_equilibrium(*o.alpha), o.nashconv, p, dbl);
    }
    return 0;
  }
  kuhn::validate_cards(o.n, o.max_cards);
  p.line("n", std::to_string(o.n));
  if (o.exact) {
    print_kuhn_profile(kuhn::pdl_strategy<kuhn::Rational>(o.n, o.max_cards), o.nashconv, p, rational_vec);
  } else {
    print_kuhn_profile(kuhn::pdl_strategy<double>(o.n, o.max_cards), o.nashconv, p, dbl);
  }
  if (!o.export_dir.empty()) {
    std::filesystem::create_directories(o.export_dir);
    for (kuhn::Decision decision : kuhn::kDecisions) {
      const std::filesystem::path path = std::filesystem::path(o.export_dir) /
          ("kuhn_n" + std::to_string(o.n) + "_" + kuhn::to_string(decision) + ".pdl");
      std::ofstream file(path);
      if (!file) throw DomainError("cannot write " + path.string());
      file << kuhn::sheet_text(o.n, decision, o.max_cards);
      p.line("wrote", path.string());
    }
  }
  return 0;
}

int cmd_weakest_link(const Options& o, Printer& p) {
  using weakest_link::Vote;
  if (o.agreement_step > 0) {
    const auto report = weakest_link::agreement_report(o.agreement_step, o.w);
    p.line("step", report.step);
    p.line("cells", std::to_string(report.cells));
    p.line("agreements", std::to_string(report.agreements));
    p.line("agreement_fraction", report.fraction);
    for (const auto& cell : report.disagreements) {
      p.line("disagree", "p1=" + p.num(cell.p1) + " p2=" + p.num(cell.p2) + " y1=" + p.num(cell.y1) +
                             " y2=" + p.num(cell.y2));
    }
    return 0;
  }
  const weakest_link::Params params{o.w, o.p1, o.p2, o.y1, o.y2};
  params.validate();
  p.line("paper_rule", weakest_link::to_string(weakest_link::decide_vote_paper(params)));
  p.line("full_enumeration", weakest_link::to_string(weakest_link::decide_vote_full(params)));
  p.line("paper_margin", weakest_link::paper_rule_margin(params));
  p.line("tie_ev", weakest_link::tie_ev(params));
  try {
    p.line("ev_paper_player1", weakest_link::ev_vote_paper(Vote::kPlayer1, params));
    p.line("ev_paper_player2", weakest_link::ev_vote_paper(Vote::kPlayer2, params));
  } catch (const DegenerateInputError& e) {
    p.line("ev_paper", std::string("undefined (") + e.what() + ")");
  }
  p.line("ev_full_player1", weakest_link::ev_vote_full(Vote::kPlayer1, params));
  p.line("ev_full_player2", weakest_link::ev_vote_full(Vote::kPlayer2, params));
  return 0;
}

int cmd_sample(const Options& o, Printer& p) {
  sampling::ExperimentConfig config;
  config.n_train = o.n_train;
  config.n_test = o.n_test;
  config.k_values = o.k_values;
  config.seed = o.seed ? *o.seed : default_seed();
  config.range = {o.low, o.high};
  config.validate();

  std::ofstream file;
  std::ostream* sink = &p.raw();
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) throw DomainError("cannot write " + o.out_path);
    sink = &file;
  }
  if (o.seeds > 0) {
    std::vector<std::uint64_t> seeds;
    for (int i = 0; i < o.seeds; ++i) seeds.push_back(config.seed + static_cast<std::uint64_t>(i));
    const auto rows = sampling::convergence_study(sampling::ZeroSumFamily::uniform(config.range),
                                                  config.k_values, seeds, config.n_test);
    *sink << "t,mean_exploitability,n_seeds\n" << std::setprecision(6);
    for (const auto& row : rows) *sink << row.t << ',' << row.mean << ',' << row.per_seed.size() << '\n';
  } else {
    const auto rows = o.kmeans ? sampling::run_kmeans_experiment(config, o.kmeans_iter)
                               : sampling::run_experiment(config);
    sampling::write_csv(*sink, rows);
  }
  if (!o.out_path.empty()) p.line("wrote", o.out_path);
  return 0;
}

Assignment parse_sets(const std::vector<std::string>& sets) {
  Assignment a;
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--set expects name=value, got '" + s + "'");
    const std::string value = s.substr(eq + 1);
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) throw UsageError("--set value is not a number: '" + s + "'");
    a[s.substr(0, eq)] = v;
  }
  return a;
}

int cmd_pdl_eval(const Options& o, Printer& p) {
  const Pdl pdl = parse_pdl(load_sheet(o.sheet));
  const auto eval = evaluate_pdl(pdl, parse_sets(o.sets));
  p.line("strategy", p.dist(eval.strategy));
  p.line("rule", rule_label(eval));
  return 0;
}

int cmd_pdl_check(const Options& o, Printer& p) {
  const Pdl pdl = parse_pdl(load_sheet(o.sheet));
  std::string family = o.family;
  if (family.empty() && o.sheet.rfind("bundled:", 0) == 0) family = o.sheet.substr(8);
  if (family.empty()) throw UsageError("--family is required for sheets that are not bundled");
  const auto report = check_implementability(pdl, families::adapter(family),
                                             families::default_grid(family, o.seed ? *o.seed : default_seed()));
  p.line("family", family);
  p.line("depth", std::to_string(report.depth));
  p.line("width", std::to_string(report.width));
  p.line("epsilon", report.epsilon);
  p.line("worst", describe(report.worst));
  return 0;
}

int cmd_pdl_render(const Options& o, Printer& p) {
  p.raw() << render_pdl(parse_pdl(load_sheet(o.sheet)));
  return 0;
}

int cmd_verify(const Options& o, Printer& p) {
  bool ok = true;
  const auto report = [&](const std::string& name, bool pass, const std::string& detail) {
    ok = ok && pass;
    p.line(name, std::string(pass ? "PASS" : "FAIL") + " (" + detail + ")");
  };

  {
    double worst = 0;
    const auto grid = families::two_by_two_grid(10000, o.seed ? *o.seed : default_seed());
    for (const auto& point : grid) {
      const TwoByTwoPayoffs<double> g{point.at("a"), point.at("b"), point.at("c"), point.at("d"),
                                      point.at("e"), point.at("f"), point.at("g"), point.at("h")};
      worst = std::max(worst, max_regret(g.game(), solve_2x2(g)));
    }
    report("solve2x2", worst <= kCertificateTolerance, "10000 games, max regret " + p.num(worst));
  }
  {
    double worst = 0;
    for (const auto& point : families::jeopardy_grid()) {
      worst = std::max(worst, jeopardy::verify_equilibrium({point.at("p1"), point.at("p2")}));
    }
    report("jeopardy", worst <= kCertificateTolerance, "21x21 grid, max regret " + p.num(worst));
  }
  {
    kuhn::Rational worst(0);
    bool value_ok = true;
    for (int i = 0; i <= 4; ++i) {
      const auto prof = kuhn::alpha_equilibrium(kuhn::Rational(i) / 4);
      worst = std::max(worst, kuhn::nashconv(prof));
      value_ok = value_ok && kuhn::expected_value(prof) == kuhn::Rational(-1) / 18;
    }
    report("kuhn_alpha", worst == 0 && value_ok, "nashconv " + worst.str() + ", value -1/18");
  }
  for (const auto& family : families::names()) {
    const auto r = check_implementability(bundled_pdl(family), families::adapter(family),
                                          families::default_grid(family, o.seed ? *o.seed : default_seed()));
    report("sheet_" + family, r.epsilon <= kCertificateTolerance,
           "depth " + std::to_string(r.depth) + ", width " + std::to_string(r.width) + ", epsilon " +
               p.num(r.epsilon));
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Solver, verifier and advisor for parametrized games", "pgames"};
  app.require_subcommand(1);
  app.add_option("--precision", o.precision, "Significant digits in printed numbers")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
  const auto prob = CLI::Range(0.0, 1.0);

  auto* solve = app.add_subcommand("solve2x2", "Equilibrium of a 2x2 game [[(a,b),(c,d)],[(e,f),(g,h)]]");
  solve->set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
  for (auto [name, ref] : std::initializer_list<std::pair<const char*, double*>>{
           {"--a", &o.a}, {"--c", &o.c}, {"--e", &o.e}, {"--g", &o.g}}) {
    solve->add_option(name, *ref, "Row payoff (utility units)")->required();
  }
  for (auto [name, ref] : std::initializer_list<std::pair<const char*, double*>>{
           {"--b", &o.b}, {"--d", &o.d}, {"--f", &o.f}, {"--h", &o.h}}) {
    solve->add_option(name, *ref, "Column payoff; omit all four for a zero-sum game");
  }

  auto* jeo = app.add_subcommand("jeopardy", "Simplified Final Jeopardy advice (banks 5 and 3)");
  jeo->add_option("--p1", o.p1, "Probability player 1 answers correctly, in [0, 1]")->required()->check(prob);
  jeo->add_option("--p2", o.p2, "Probability player 2 answers correctly, in [0, 1]")->required()->check(prob);
  jeo->add_option("--player", o.player, "1 or 2; both when omitted")->check(CLI::IsMember({1, 2}));
  jeo->add_flag("--verify", o.verify, "Also print the max regret of the advised profile");

  auto* kuh = app.add_subcommand("kuhn", "Threshold strategy for n-card Kuhn poker");
  kuh->add_option("--n", o.n, "Deck size, 3 <= n <= --max-cards")->capture_default_str();
  kuh->add_option("--max-cards", o.max_cards, "Upper limit on n")->capture_default_str()->check(CLI::PositiveNumber);
  kuh->add_flag("--nashconv", o.nashconv, "Print best-response values and NashConv");
  kuh->add_flag("--exact", o.exact, "Rational arithmetic, printed as fractions");
  kuh->add_option("--export-pdl", o.export_dir, "Directory for the four cheat-sheet files");
  kuh->add_option("--alpha", o.alpha, "Three-card equilibrium with this alpha in [0, 1] instead")->check(prob);

  auto* wl = app.add_subcommand("weakest-link", "Final-three vote in Weakest Link");
  wl->add_option("--w", o.w, "Bank in currency units, > 0")->capture_default_str()->check(CLI::PositiveNumber);
  for (auto [name, ref, help] : std::initializer_list<std::tuple<const char*, double*, const char*>>{
           {"--p1", &o.p1, "Your head-to-head win probability against player 1, in [0, 1]"},
           {"--p2", &o.p2, "... against player 2 (the stronger), in [0, 1], below p1"},
           {"--y1", &o.y1, "Probability player 1 votes for you, in [0, 1]"},
           {"--y2", &o.y2, "Probability player 2 votes for you, in [0, 1]"}}) {
    wl->add_option(name, *ref, help)->check(prob);
  }
  wl->add_option("--agreement", o.agreement_step,
                 "Compare the two decision rules on a grid with this step in (0, 0.5] instead");

  auto* smp = app.add_subcommand("sample", "Nearest-neighbor exploitability experiment (CSV)");
  smp->add_option("--n-train", o.n_train, "Training games")->capture_default_str()->check(CLI::PositiveNumber);
  smp->add_option("--n-test", o.n_test, "Test games per k")->capture_default_str()->check(CLI::PositiveNumber);
  smp->add_option("--k", o.k_values, "Ascending training-prefix sizes")->delimiter(',')->capture_default_str();
  smp->add_option("--seed", o.seed, "Master seed; defaults to $PGAMES_SEED, else 42");
  smp->add_option("--low", o.low, "Lower payoff bound")->capture_default_str();
  smp->add_option("--high", o.high, "Upper payoff bound")->capture_default_str();
  smp->add_option("--out", o.out_path, "CSV file; stdout when omitted");
  smp->add_flag("--kmeans", o.kmeans, "Read k as a cluster count and look up cluster means");
  smp->add_option("--kmeans-iter", o.kmeans_iter, "Lloyd iteration cap")->capture_default_str();
  smp->add_option("--seeds", o.seeds, "Average over this many consecutive seeds instead (t,mean CSV)");

  auto* pdl = app.add_subcommand("pdl", "Cheat-sheet files (path or bundled:NAME)");
  pdl->require_subcommand(1);
  auto* pdl_eval = pdl->add_subcommand("eval", "Evaluate a cheat sheet at one parameter point");
  pdl_eval->add_option("sheet", o.sheet, "Cheat-sheet file")->required();
  pdl_eval->add_option("--set", o.sets, "Parameter value, name=value (repeatable)");
  auto* pdl_check = pdl->add_subcommand("check", "Depth, width and worst-case error on a family grid");
  pdl_check->add_option("sheet", o.sheet, "Cheat-sheet file")->required();
  pdl_check->add_option("--family", o.family, "jeopardy_p1, jeopardy_p2, two_by_two or weakest_link");
  pdl_check->add_option("--seed", o.seed, "Seed for random grids");
  auto* pdl_render = pdl->add_subcommand("render", "Print the canonical form");
  pdl_render->add_option("sheet", o.sheet, "Cheat-sheet file")->required();

  auto* ver = app.add_subcommand("verify", "Run every equilibrium certificate");
  ver->add_option("--seed", o.seed, "Seed for random games");

  auto* srv = app.add_subcommand("serve", "Start the HTTP advisor");
  srv->add_option("--host", o.host, "Bind address")->capture_default_str();
  srv->add_option("--port", o.port, "TCP port")->capture_default_str()->check(CLI::Range(1, 65535));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Printer p(out, o.precision);
  try {
    if (*solve) return cmd_solve2x2(*solve, o, p);
    if (*jeo) return cmd_jeopardy(o, p);
    if (*kuh) return cmd_kuhn(o, p);
    if (*wl) {
      if (o.agreement_step == 0) {
        for (const char* name : {"--p1", "--p2", "--y1", "--y2"}) {
          if (!wl->count(name)) throw UsageError(std::string(name) + " is required");
        }
      }
      return cmd_weakest_link(o, p);
    }
    if (*smp) return cmd_sample(o, p);
    if (*pdl_eval) return cmd_pdl_eval(o, p);
    if (*pdl_check) return cmd_pdl_check(o, p);
    if (*pdl_render) return cmd_pdl_render(o, p);
    if (*ver) return cmd_verify(o, p);
    if (*srv) {
      service::serve(o.host, o.port);
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace pgames::cli
