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


#include "pgames/families.hpp"

#include <algorithm>
#include <cmath>

#include "pgames/jeopardy.hpp"
#include "pgames/sampling.hpp"
#include "pgames/weakest_link.hpp"

namespace pgames::families {

const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames = {"jeopardy_p1", "jeopardy_p2", "two_by_two",
                                                  "weakest_link"};
  return kNames;
}

namespace {

double at(const Assignment& point, const char* name) {
  auto it = point.find(name);
  if (it == point.end()) throw EvaluationError(std::string("grid point lacks '") + name + "'");
  return it->second;
}

std::vector<double> axis(double step) {
  const int last = static_cast<int>(std::floor(1.0 / step + 1e-9));
  std::vector<double> out;
  for (int i = 0; i <= last; ++i) out.push_back(std::min(1.0, i * step));
  return out;
}

ObjectiveAdapter jeopardy_adapter(int player) {
  ObjectiveAdapter a;
  a.optimal = [](const Assignment&) { return 0.0; };
  a.achieved = [player](const Assignment& point, const PdlEvaluation& eval) {
    const jeopardy::Params params{at(point, "p1"), at(point, "p2")};
    StrategyProfile<double> profile = jeopardy::advised_profile(params);
    if (player == 1) {
      profile.row = jeopardy::to_mixed(eval.strategy, 1);
    } else {
      profile.col = jeopardy::to_mixed(eval.strategy, 2);
    }
    return -max_regret(jeopardy::payoff_matrix(params), profile);
  };
  return a;
}

TwoByTwoPayoffs<double> payoffs_at(const Assignment& point) {
  return {at(point, "a"), at(point, "b"), at(point, "c"), at(point, "d"),
          at(point, "e"), at(point, "f"), at(point, "g"), at(point, "h")};
}

ObjectiveAdapter two_by_two_adapter() {
  ObjectiveAdapter a;
  a.optimal = [](const Assignment&) { return 0.0; };
  a.achieved = [](const Assignment& point, const PdlEvaluation& eval) {
    return -max_regret(payoffs_at(point).game(), two_by_two_profile(eval.strategy));
  };
  return a;
}

weakest_link::Params wl_params(const Assignment& point) {
  return {1.0, at(point, "p1"), at(point, "p2"), at(point, "y1"), at(point, "y2")};
}

ObjectiveAdapter weakest_link_adapter() {
  using weakest_link::Vote;
  ObjectiveAdapter a;
  a.optimal = [](const Assignment& point) {
    const auto params = wl_params(point);
    return std::max(weakest_link::ev_vote_paper(Vote::kPlayer1, params),
                    weakest_link::ev_vote_paper(Vote::kPlayer2, params));
  };
  a.achieved = [](const Assignment& point, const PdlEvaluation& eval) {
    const auto params = wl_params(point);
    return prob_of(eval.strategy, "vote_player1") * weakest_link::ev_vote_paper(Vote::kPlayer1, params) +
           prob_of(eval.strategy, "vote_player2") * weakest_link::ev_vote_paper(Vote::kPlayer2, params);
  };
  return a;
}

}  // namespace

ObjectiveAdapter adapter(const std::string& family) {
  if (family == "jeopardy_p1") return jeopardy_adapter(1);
  if (family == "jeopardy_p2") return jeopardy_adapter(2);
  if (family == "two_by_two") return two_by_two_adapter();
  if (family == "weakest_link") return weakest_link_adapter();
  throw ParameterError("family", "unknown game family '" + family + "'");
}

std::vector<Assignment> jeopardy_grid(double step) {
  std::vector<Assignment> grid;
  for (double p1 : axis(step)) {
    for (double p2 : axis(step)) grid.push_back({{"p1", p1}, {"p2", p2}});
  }
  return grid;
}

std::vector<Assignment> two_by_two_grid(std::size_t count, std::uint64_t seed) {
  sampling::Uniform draw(sampling::derive_seed(seed, 3), {-1.0, 1.0});
  static const char* kNames[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  std::vector<Assignment> grid(count);
  for (auto& point : grid) {
    for (const char* name : kNames) point[name] = draw();
  }
  return grid;
}

std::vector<Assignment> weakest_link_grid(double step) {
  std::vector<Assignment> grid;
  const auto values = axis(step);
  for (double p1 : values) {
    for (double p2 : values) {
      if (!(p1 > p2)) continue;
      for (double y1 : values) {
        for (double y2 : values) {
          if (y1 * (1.0 - y2) + y2 * (1.0 - y1) == 0.0) continue;
          grid.push_back({{"p1", p1}, {"p2", p2}, {"y1", y1}, {"y2", y2}});
        }
      }
    }
  }
  return grid;
}

std::vector<Assignment> default_grid(const std::string& family, std::uint64_t seed) {
  if (family == "jeopardy_p1" || family == "jeopardy_p2") return jeopardy_grid();
  if (family == "two_by_two") return two_by_two_grid(1000, seed);
  if (family == "weakest_link") return weakest_link_grid();
  throw ParameterError("family", "unknown game family '" + family + "'");
}

StrategyProfile<double> two_by_two_profile(const ActionDistribution& joint) {
  const double p11 = prob_of(joint, "r1c1"), p12 = prob_of(joint, "r1c2");
  const double p21 = prob_of(joint, "r2c1"), p22 = prob_of(joint, "r2c2");
  StrategyProfile<double> s{MixedStrategy<double>(2), MixedStrategy<double>(2)};
  s.row << p11 + p12, p21 + p22;
  s.col << p11 + p21, p12 + p22;
  return s;
}

}  // namespace pgames::families
